#
# The mbg command-line interface
#
import argparse
import json
import logging
import sys

from mbg._version import __version__
from mbg.common import Campaign, Status
from mbg.common.errors import MBGError
from mbg.matroid import family_to_json, good_cycles_bruteforce
from mbg.hamiltonian import count_hc_through_edge, hc_star, WitnessGenerator, witness_set_to_json
from mbg.bounds import bound_table
from mbg.harness import campaigns
from mbg.harness.instances import FAMILIES, parse_ints, resolve
from mbg.harness.report import export_dot, read_report, replay, write_report

__all__ = ['main', 'create_parser']

logger = logging.getLogger(__name__)

BOUND_FAMILIES = ('graphic2', 'graphicK', 'complete', 'prism', 'catalan', 'uniform', 'corollary')


def _emit(data, target):
    text = json.dumps(data, sort_keys=True, indent=2)
    if target == '-':
        print(text)
    else:
        with open(target, 'w') as OUTPUT:
            OUTPUT.write(text + "\n")


def _edge(args, bg):
    if args.edge is None:
        return next(iter(bg.edges()))
    return parse_ints(args.edge, 2)


def _instance_arguments(parser, edge=False):
    parser.add_argument('--family', required=True, choices=FAMILIES, help="The matroid family")
    parser.add_argument('--params', required=True,
                        help="Family parameters: a generator expression or JSON file (graphic), k (catalan), Q (gencat), r,n (uniform), a JSON file (json)")
    if edge:
        parser.add_argument('--edge', default=None, help="A basis-graph edge given as two vertex indices, e.g. 0,1")
    parser.add_argument('--json', nargs='?', const='-', default=None, help="Write JSON to this file, or to stdout without a file name")


def cmd_bases(args):
    _, handle = resolve(args.family, args.params)
    family = handle.family()
    if args.json:
        _emit(family_to_json(family), args.json)
    else:
        for i, B in enumerate(family):
            print("%d: {%s}" % (i, ",".join(str(x) for x in sorted(B))))
    return 0


def cmd_bg(args):
    _, handle = resolve(args.family, args.params)
    bg = handle.basis_graph()
    if args.dot:
        with open(args.dot, 'w') as OUTPUT:
            OUTPUT.write(export_dot(bg))
    if args.json:
        _emit({'vertices': len(bg), 'edges': [list(e) for e in bg.edges()]}, args.json)
    else:
        print("vertices: %d" % len(bg))
        print("edges: %d" % bg.num_edges())
    return 0


def cmd_good_cycles(args):
    _, handle = resolve(args.family, args.params)
    bg = handle.basis_graph()
    b1, b2 = _edge(args, bg)
    cycles = None if args.oracle else handle.good_cycles(b1, b2)
    source = 'templates'
    if cycles is None:
        cycles = good_cycles_bruteforce(bg, b1, b2)
        source = 'oracle'
    cycles = sorted(cycles, key=lambda c: c.sort_key())
    if args.dot:
        with open(args.dot, 'w') as OUTPUT:
            OUTPUT.write(export_dot(bg, highlights=cycles))
    if args.json:
        _emit({'edge': [b1, b2], 'source': source,
               'cycles': [dict(vertices=list(c.vertices()), e=c.e, g=c.g, f=c.f, w=c.w) for c in cycles]}, args.json)
    else:
        print("%d good cycles for edge (%d,%d) from the %s" % (len(cycles), b1, b2, source))
        for c in cycles:
            print("  %s  e=%d g=%d f=%d w=%d" % (" ".join(str(v) for v in c.vertices()), c.e, c.g, c.f, c.w))
    return 0


def cmd_count_hc(args):
    _, handle = resolve(args.family, args.params)
    bg = handle.basis_graph()
    if args.edge is None:
        count = hc_star(bg, cap=args.cap)
    else:
        count = count_hc_through_edge(bg, parse_ints(args.edge, 2), cap=args.cap)
    if args.json:
        _emit({'value': count.value, 'capped': count.capped, 'edge': list(count.edge)}, args.json)
    else:
        print("%s%d Hamiltonian cycles through edge %s" % ("at least " if count.capped else "", count.value, str(count.edge)))
    return 0


def cmd_witness(args):
    _, handle = resolve(args.family, args.params)
    bg = handle.basis_graph()
    edge = _edge(args, bg)
    generator = WitnessGenerator(cutoff=args.cutoff, limit=args.limit)
    witnesses = generator.generate(handle, edge)
    if args.json:
        _emit(witness_set_to_json(witnesses), args.json)
    else:
        print("%d witnesses through edge %s (%d collisions)" % (len(witnesses), str(witnesses.edge), witnesses.collisions))
        for order in witnesses.sorted_cycles():
            print("  " + " ".join(str(v) for v in order))
    return 0


def cmd_bounds(args):
    grid = [parse_ints(p) for p in args.params.split(';') if p.strip()]
    rows = bound_table(args.family, grid)
    if args.json:
        _emit([dict(r) for r in rows], args.json)
    else:
        for r in rows:
            print("%s %s: %d" % (r.formula_tag, ",".join(str(p) for p in r.params), r.value))
    return 0


def cmd_verify(args):
    if args.replay:
        results = replay(read_report(args.replay), campaign=args.family)
    else:
        if args.family is None:
            raise MBGError("verify needs --family or --replay")
        options = {'seed': args.seed, 'cap': not args.no_cap, 'witnesses': args.witnesses,
                   'workers': args.workers, 'orbit': args.orbit}
        if args.sample is not None:
            options['sample'] = args.sample
        if args.n_max is not None:
            options['n_max'] = args.n_max
        if args.m_max is not None:
            options['m_max'] = args.m_max
        if args.k_max is not None:
            options['k_max'] = args.k_max
        if args.grid is not None:
            if args.family == 'gencat':
                options['words'] = [w for w in args.grid.split(';') if w.strip()]
            else:
                options['grid'] = [list(parse_ints(p, 2)) for p in args.grid.split(';') if p.strip()]
        results = Campaign(args.family, **options).run()
    if args.json:
        if args.json == '-':
            print(results.dumps())
        else:
            write_report(results, args.json)
    print(results)
    for r in results.failures():
        print("FAIL %s edge %s" % (json.dumps(r.instance, sort_keys=True), r.edge))
    return 1 if results.status == Status.FAIL else 0


def cmd_export(args):
    _, handle = resolve(args.family, args.params)
    bg = handle.basis_graph()
    highlights = None
    if args.edge is not None:
        b1, b2 = parse_ints(args.edge, 2)
        cycles = handle.good_cycles(b1, b2)
        if cycles is None:
            cycles = good_cycles_bruteforce(bg, b1, b2)
        highlights = sorted(cycles, key=lambda c: c.sort_key())
    if args.dot:
        with open(args.dot, 'w') as OUTPUT:
            OUTPUT.write(export_dot(bg, highlights=highlights))
    else:
        sys.stdout.write(export_dot(bg, highlights=highlights))
    if args.json:
        _emit(family_to_json(handle.family()), args.json)
    return 0


def create_parser():
    parser = argparse.ArgumentParser(prog='mbg', description="Hamiltonian cycles in matroid basis graphs")
    parser.add_argument('--version', action='version', version='mbg %s' % __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0, help="More logging output")
    parser.add_argument('-q', '--quiet', action='store_true', help="Only log errors")
    subparsers = parser.add_subparsers(dest='command')

    p = subparsers.add_parser('bases', help="List the bases of a matroid")
    _instance_arguments(p)
    p.set_defaults(func=cmd_bases)

    p = subparsers.add_parser('bg', help="Summarize a basis graph")
    _instance_arguments(p)
    p.add_argument('--dot', default=None, help="Write the basis graph in DOT format")
    p.set_defaults(func=cmd_bg)

    p = subparsers.add_parser('good-cycles', help="List the good cycles of a basis-graph edge")
    _instance_arguments(p, edge=True)
    p.add_argument('--oracle', action='store_true', help="Use the brute-force enumeration instead of the templates")
    p.add_argument('--dot', default=None, help="Write the basis graph with the good cycles highlighted")
    p.set_defaults(func=cmd_good_cycles)

    p = subparsers.add_parser('count-hc', help="Count Hamiltonian cycles through an edge, or HC* without --edge")
    _instance_arguments(p, edge=True)
    p.add_argument('--cap', type=int, default=None, help="Stop counting at this value")
    p.set_defaults(func=cmd_count_hc)

    p = subparsers.add_parser('witness', help="Construct Hamiltonian cycles through an edge")
    _instance_arguments(p, edge=True)
    p.add_argument('--limit', type=int, default=None, help="The maximum number of witnesses")
    p.add_argument('--cutoff', type=int, default=5, help="Enumerate basis graphs up to this size exhaustively")
    p.set_defaults(func=cmd_witness)

    p = subparsers.add_parser('bounds', help="Evaluate lower bounds")
    p.add_argument('--family', required=True, choices=BOUND_FAMILIES)
    p.add_argument('--params', required=True, help="Parameter tuples separated by ';', e.g. '4,4;5,5'")
    p.add_argument('--json', nargs='?', const='-', default=None)
    p.set_defaults(func=cmd_bounds)

    p = subparsers.add_parser('verify', help="Run a verification campaign")
    p.add_argument('--family', default=None, choices=sorted(Campaign), help="The campaign")
    p.add_argument('--replay', default=None, help="Re-check the failed records of a report, or a single record")
    p.add_argument('--n-max', type=int, default=None)
    p.add_argument('--m-max', type=int, default=None)
    p.add_argument('--k-max', type=int, default=None)
    p.add_argument('--grid', default=None, help="r,n pairs (uniform) or Q words (gencat) separated by ';'")
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--sample', type=int, default=None, help="Verify at most this many edges per instance")
    p.add_argument('--orbit', action='store_true', help="One edge per edge-transitive basis graph")
    p.add_argument('--no-cap', action='store_true', help="Count Hamiltonian cycles exactly")
    p.add_argument('--witnesses', action='store_true', help="Also generate witness sets")
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--json', nargs='?', const='-', default=None, help="Write the JSON report")
    p.set_defaults(func=cmd_verify)

    p = subparsers.add_parser('export', help="Export a basis graph in DOT format")
    _instance_arguments(p, edge=True)
    p.add_argument('--dot', default=None, help="The DOT file; stdout by default")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv=None):
    parser = create_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (MBGError, AssertionError) as err:
        print("mbg %s: error: %s" % (args.command, str(err)), file=sys.stderr)
        return 2


if __name__ == "__main__":      #pragma: no cover
    sys.exit(main())
