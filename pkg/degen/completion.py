try:
    import argcomplete
except ImportError:

    class FakeModule:

        @staticmethod
        def _fun(*args, **kwargs):
            pass

        def __getattr__(self, _):
            return self._fun

    argcomplete = FakeModule()

from .initial_data import InitialProfile


def autocomplete(parser):
    argcomplete.autocomplete(parser)


class BaseCompleter(object):

    def __call__(self, **kwargs):
        try:
            return self._complete(**kwargs)
        except Exception as e:
            argcomplete.warn(e)


class ProfileCompletion(BaseCompleter):
    """Named initial data, plus the prefixes of the parametrized forms."""

    values = list(InitialProfile.NAMED) + [InitialProfile.POLYNOMIAL + ':',
                                           InitialProfile.SAMPLED + ':']

    def _complete(self, prefix='', **kwargs):
        return [v for v in self.values if v.startswith(prefix)]
