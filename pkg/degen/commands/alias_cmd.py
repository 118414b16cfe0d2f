from .. import inverse
from ..command_utils import (add_output_arguments, context, emit_rows,
                             interior_point, positive_int)


def parser(subparsers, conf):
    parser = subparsers.add_parser('alias',
                                   help='degeneracy points sharing an eigenvalue with a1')
    parser.add_argument('--a1', type=interior_point, required=True,
                        help='reference degeneracy point, in (0, 1)')
    parser.add_argument('--m-max', type=positive_int, default=20,
                        help='largest mode index tried (default: %(default)s)')
    add_output_arguments(parser, conf)
    return parser


def command(conf, args):
    table, _ = context(conf)
    rows = []
    for m1 in range(1, args.m_max + 1):
        for m2 in range(1, args.m_max + 1):
            if m1 == m2:
                continue
            a2 = inverse.alias_pair(args.a1, m1, m2, table)
            if a2 is not None:
                rows.append((args.a1, m1, m2, a2))
    emit_rows(conf, args, 'alias', ('a1', 'm1', 'm2', 'a2'), rows,
              {'a1': args.a1, 'm_max': args.m_max})
