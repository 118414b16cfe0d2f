import logging
import unittest

import dotdot
from degen import uis
from degen.events import Event, IterateEvent, OutputWrittenEvent


_output = None


class StringEvent(Event):
    def __init__(self, string):
        self.string = string


class Info(Event):
    def __init__(self, info):
        self.info = info


class SpecificInfo(Info):
    def __init__(self, info, specific):
        Info.__init__(self, info)
        self.specific = specific


@StringEvent.listen(12, 15)
def display(event, nb1, nb2):
    _output.append("%s %s %s" % (event.string, nb1, nb2))


@StringEvent.listen()
def hello_word(event):
    _output.append('Helloword')


@Info.listen()
def collect_info_instance(infoevent):
    _output.append(infoevent.info)
    if isinstance(infoevent, SpecificInfo):
        _output.append(infoevent.specific)


@IterateEvent.listen()
def collect_iterate(event):
    if _output is not None:
        _output.append(event.description)


@OutputWrittenEvent.listen('tag')
def collect_output(event, tag):
    if _output is not None:
        _output.append((tag, event.path, event.manifest))


class TestEvents(unittest.TestCase):

    def setUp(self):
        global _output
        _output = []
        # dotdot silences logging suite-wide; assertLogs needs it enabled
        logging.disable(logging.NOTSET)

    def tearDown(self):
        global _output
        _output = None
        logging.disable(logging.CRITICAL)

    def test_listen_StringEvent(self):
        StringEvent('abc').send()
        self.assertEqual(_output, ['abc 12 15', 'Helloword'])

    def test_listen_Info(self):
        Info('info').send()
        SpecificInfo('info', 'specific').send()
        self.assertEqual(_output, ['info', 'info', 'specific'])

    def test_iterate_description(self):
        IterateEvent(.25, 1e-3).send()
        self.assertEqual(_output, ['Evaluated cost 0.001 at a = 0.25.'])

    def test_output_written(self):
        event = OutputWrittenEvent('/tmp/out.csv', None)
        event.send()
        self.assertEqual(_output, [('tag', '/tmp/out.csv', None)])
        self.assertEqual(event.description, 'Wrote /tmp/out.csv.')

    def test_unrelated_events_are_silent(self):
        Event().send()
        self.assertEqual(_output, [])

    def test_iterates_are_logged(self):
        with self.assertLogs(uis.logger, level='DEBUG') as cm:
            IterateEvent(.5, 2.).send()
        self.assertEqual(cm.output, ['DEBUG:degen.uis:Evaluated cost 2.0 at a = 0.5.'])


if __name__ == '__main__':
    unittest.main()
