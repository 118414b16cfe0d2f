from __future__ import print_function

import sys
import logging
import traceback

from . import config
from .events import IterateEvent


DEBUG = False  # unhandled exceptions traces are printed
DEBUG_ALL_TRACES = False  # handled exceptions traces are printed
# package-shared ui that can be accessed using :
# from uis import get_ui
# ui = get_ui()
# you must instanciate ui with a Config instance using init_ui(config)
_ui = None

logger = logging.getLogger(__name__)


@IterateEvent.listen()
def log_iterate(event):
    """Solver progress, shown with the debug option."""
    logger.debug(event.description)


def get_ui():
    if _ui is None:
        return PrintUI(config.load_default_conf())
    return _ui


def init_ui(conf):
    global _ui
    _ui = PrintUI(conf)
    if _ui.debug:
        logging.basicConfig(stream=_ui._stderr, level=logging.DEBUG,
                            format='%(name)s: %(message)s')


class PrintUI(object):
    """Data goes to stdout, diagnostics to stderr, so outputs can be piped."""

    def __init__(self, conf):
        """
        :param conf: if None, conservative default values are used.
                     Useful to instanciate the UI before parsing the config file.
        """
        self._stdout = sys.stdout
        self._stderr = sys.stderr
        self.debug = conf['main'].get('debug', False) if conf is not None else False

    def write(self, data):
        """Raw data, printed as is."""
        self._stdout.write(data)

    def info(self, message, **kwargs):
        kwargs['file'] = self._stderr
        print('info: {}'.format(message), **kwargs)

    def warning(self, message, **kwargs):
        kwargs['file'] = self._stderr
        print('warning: {}'.format(message), **kwargs)

    def error(self, message, **kwargs):
        kwargs['file'] = self._stderr
        print('error: {}'.format(message), **kwargs)

        if DEBUG_ALL_TRACES:  # if an exception has been raised, print the trace.
            if sys.exc_info()[0] is not None:
                traceback.print_exception(*sys.exc_info())

    def exit(self, error_code=1):
        sys.exit(error_code)

    def handle_exception(self, exc):
        """Attempts to handle exception.

        :returns: True if exception has been handled (currently never happens)
        """
        self.error(str(exc))
        if DEBUG or self.debug:
            raise
        else:
            self.exit()
        return True # never happens
