import os

import configobj
import validate

from .spec import configspec
from ..errors import ConfigError
from ..fd_oracle import FdConfig
from ..inverse import InversionConfig
from ..spectral import TruncationPolicy


DFT_CONFIG_PATH = os.path.expanduser('~/.degenrc')
CONF_ENV = 'DEGENCONF'
OUTPUT_DIR_ENV = 'DEGEN_OUTPUT_DIR'


class ConfigurationError(ConfigError):

    default_message = "Invalid configuration {path}: {reason}."


def load_default_conf():
    """Load the default configuration"""
    default_conf = configobj.ConfigObj(configspec=configspec)
    check_conf(default_conf)
    return default_conf


def get_confpath():
    """Return the configuration filepath, honouring $DEGENCONF."""
    confpath = DFT_CONFIG_PATH
    if CONF_ENV in os.environ:
        confpath = os.path.abspath(os.path.expanduser(os.environ[CONF_ENV]))
    return confpath


def check_conf(conf):
    """Type check a configuration, filling in the defaults."""
    validator = validate.Validator()
    results = conf.validate(validator, copy=True, preserve_errors=True)
    if results is not True:
        bad = []
        for sections, key, error in configobj.flatten_errors(conf, results):
            name = '.'.join(list(sections) + [key or '<section>'])
            bad.append('{} ({})'.format(name, error or 'missing'))
        raise ConfigurationError(path=conf.filename or '<default>',
                                 reason='bad values for ' + ', '.join(bad))


def load_conf(path=None):
    """Load the configuration.

    A missing file is not an error: the defaults are used, and the path is
    remembered so that the configuration can be saved there.
    """
    if path is None:
        path = get_confpath()
    if not os.path.exists(path):
        conf = load_default_conf()
        conf.filename = path
        return conf
    try:
        conf = configobj.ConfigObj(path, configspec=configspec)
    except configobj.ConfigObjError as e:
        raise ConfigurationError(path=path, reason=str(e))
    conf.filename = path
    check_conf(conf)
    return conf


def get_output_dir(conf):
    """Default directory of written data; $DEGEN_OUTPUT_DIR wins over the file."""
    output_dir = os.environ.get(OUTPUT_DIR_ENV) or conf['main']['output_dir']
    return os.path.expanduser(output_dir) if output_dir else ''


# value objects of the numerical modules

def truncation_policy(conf):
    series = conf['series']
    return TruncationPolicy(max_terms=min(series['max_terms'], series['capacity']),
                            tail_tol=series['tail_tol'], t_min=series['t_min'],
                            quad_tol=series['quad_tol'])


def fd_config(conf, T_end=1.):
    fd = conf['fd']
    return FdConfig(nx=fd['nx'], nt=fd['nt'], scheme=fd['scheme'], T_end=T_end)


def inversion_config(conf, a_init=.1, delta=None):
    inv = conf['inversion']
    return InversionConfig(delta=inv['delta'] if delta is None else delta, a_init=a_init,
                           multistart=inv['multistart'], tol_a=inv['tol_a'],
                           max_iters=inv['max_iters'],
                           use_derivative=inv['use_derivative'])
