"""Run manifests: the parameter echo written next to every data file."""
import datetime
import logging
import sys

from . import __version__
from .content import write_file
from .endecoder import EnDecoder
from .events import OutputWrittenEvent


logger = logging.getLogger(__name__)

MANIFEST_SUFFIX = '.manifest.yaml'

ARTIFACTS = {
    'zeros': 'zero brackets of J0',
    'trace': 'boundary flux series',
    'scan': 'monotonicity of the boundary flux',
    'fdcheck': 'finite volume cross-check',
    'invert': 'single run recovery',
    'alias': 'eigenvalue aliasing pairs',
    'collide': 'observation collision',
    'multistart': 'multi-start recovery, u0 = 1',
    'noise-one': 'noise sweep, u0 = 1',
    'noise-one-minus-x': 'noise sweep, u0 = 1 - x',
    'scan-regimes': 'monotone and non-monotone regimes of dmu/da',
    'collision': 'observation collision, u0 = x',
    'audit': 'Lipschitz stability audit, u0 = 1 and u0 = 1 - x',
}


def build_manifest(command, parameters, seeds=(), artifact=None, wall_time=None,
                   argv=None):
    """Everything needed to re-run a command and get the same data back."""
    return {
        'tool': 'degen',
        'version': __version__,
        'command': command,
        'argv': list(sys.argv[1:] if argv is None else argv),
        'parameters': dict(parameters),
        'seeds': list(seeds),
        'artifact': artifact if artifact is not None else ARTIFACTS.get(command, command),
        'wall_time': wall_time,
        'created': datetime.datetime.now().replace(microsecond=0).isoformat(),
    }


def manifest_path(path):
    return path + MANIFEST_SUFFIX


@OutputWrittenEvent.listen()
def write_manifest(event):
    if event.manifest is None:
        return
    target = manifest_path(event.path)
    write_file(target, EnDecoder().encode_manifest(event.manifest))
    logger.debug('wrote manifest %s', target)
