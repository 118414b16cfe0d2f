import csv
import io
import json
import numbers

import yaml


"""Important notice:
    All functions and methods in this file assume and produce unicode data.
"""


FLOAT_FORMAT = '%.17g'

OBSERVATION_HEADER = ('t', 'beta')
SAMPLE_HEADER = ('x', 'value')


def format_value(value):
    """Text form of a table cell; floats keep 17 significant digits."""
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return FLOAT_FORMAT % float(value)
    return str(value)


def _plain(data):
    """Convert tuples and numpy values to plain python for json and yaml."""
    if isinstance(data, dict):
        return {str(k): _plain(v) for k, v in data.items()}
    if isinstance(data, (list, tuple)):
        return [_plain(v) for v in data]
    if hasattr(data, 'tolist'):
        return _plain(data.tolist())
    return data


class EnDecoder(object):
    """ Encode and decode content.

        Design choices:
        * Has no interaction with disk.
        * Incoming content is not trusted.
        * Returned content must be correctly formatted (no one else checks).
        * Decoding failures raise DecodingError
    """

    class DecodingError(Exception):

        def __init__(self, error_msg, data):
            """
            :param error_msg: specific message about what went wrong
            :param data:      the data that was unsuccessfully decoded.
            """
            super(Exception, self).__init__(error_msg)  # make `str(self)` work.
            self.data = data

    def encode_table(self, header, rows):
        """CSV with a one-line header."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            if len(row) != len(header):
                raise ValueError('row {!r} does not match header {!r}'.format(row, header))
            writer.writerow([format_value(v) for v in row])
        return out.getvalue()

    def encode_record(self, record):
        """JSON with sorted keys; floats use the shortest repr that round-trips."""
        return json.dumps(_plain(record), sort_keys=True, indent=2) + '\n'

    def decode_record(self, record_raw):
        try:
            return json.loads(record_raw)
        except ValueError as e:
            raise self.DecodingError('invalid json: {}'.format(e), record_raw)

    def encode_manifest(self, manifest):
        return yaml.safe_dump(_plain(manifest), allow_unicode=True,
                              default_flow_style=False, encoding=None, indent=4)

    def decode_manifest(self, manifest_raw):
        try:
            return yaml.safe_load(manifest_raw)
        except yaml.YAMLError as e:
            raise self.DecodingError('invalid manifest: {}'.format(e), manifest_raw)

    def decode_columns(self, text, header):
        """Parse a CSV with the given header into one list of floats per column."""
        if len(text.strip()) == 0:
            raise self.DecodingError('parsing error: the provided data is empty.', text)
        reader = csv.reader(io.StringIO(text))
        rows = [row for row in reader if row and any(cell.strip() for cell in row)]
        found = tuple(cell.strip() for cell in rows[0])
        if found != tuple(header):
            raise self.DecodingError('expected header {}, found {}'.format(
                ','.join(header), ','.join(found)), text)
        columns = [[] for _ in header]
        for line, row in enumerate(rows[1:], start=2):
            if len(row) != len(header):
                raise self.DecodingError('row {} has {} fields, expected {}'.format(
                    line, len(row), len(header)), text)
            try:
                for column, cell in zip(columns, row):
                    column.append(float(cell))
            except ValueError:
                raise self.DecodingError('row {}: malformed number in {!r}'.format(
                    line, ','.join(row)), text)
        if not columns[0]:
            raise self.DecodingError('no data rows after the header', text)
        return columns

    def decode_observations(self, text):
        """(times, values) from a ``t,beta`` CSV."""
        return tuple(self.decode_columns(text, OBSERVATION_HEADER))

    def decode_samples(self, text):
        """(xs, values) from an ``x,value`` CSV."""
        return tuple(self.decode_columns(text, SAMPLE_HEADER))
