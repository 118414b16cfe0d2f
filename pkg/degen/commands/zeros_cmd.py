from .. import bessel
from ..command_utils import add_output_arguments, emit_rows, positive_int


def parser(subparsers, conf):
    parser = subparsers.add_parser('zeros', help='list the first zeros of J0')
    parser.add_argument('--count', type=positive_int, default=10,
                        help='number of zeros (default: %(default)s)')
    add_output_arguments(parser, conf)
    return parser


def command(conf, args):
    table = bessel.build_table(args.count)
    lo, hi = bessel.zero_bracket(range(1, args.count + 1))
    rows = [(n, table.zero(n), float(lo[n - 1]), float(hi[n - 1]), table.deriv(n))
            for n in range(1, args.count + 1)]
    emit_rows(conf, args, 'zeros', ('n', 'j_n', 'bracket_lo', 'bracket_hi', 'dJ0_at_j_n'),
              rows, {'count': args.count})
