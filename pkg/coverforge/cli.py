import argparse
import logging
import sys
from typing import List, Optional, Sequence

from . import errors, export, util
from ._braid import load_certificate, parse_braid
from ._catalog import FAMILIES, build_family, default_catalog, run_catalog
from ._invariants import Conclusion, analyze, compare

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISTINGUISHED = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='coverforge',
        description='Cyclic branched covers of transverse braids: surgery diagrams, invariants and classification',
    )
    parser.add_argument('-v', '--verbose', action='store_true', help='Log pipeline details to stderr')
    commands = parser.add_subparsers(dest='command', required=True)

    analyze_parser = commands.add_parser('analyze', help='Invariants of one cover')
    analyze_parser.add_argument('--braid', required=True, help="Braid word, e.g. 's1 s2^2 -s1'")
    analyze_parser.add_argument('--strands', required=True, type=int)
    analyze_parser.add_argument('--p', required=True, type=int, help='Cover degree')
    analyze_parser.add_argument('--format', choices=('json', 'text'), default='text')
    analyze_parser.add_argument('--export', nargs=2, metavar=('FORMAT', 'PATH'),
                                help='Also write the surgery diagram (dot or json) to PATH')
    analyze_parser.add_argument('--qp-cert', metavar='FILE', help='Quasipositivity certificate (JSON)')
    analyze_parser.set_defaults(handler=cmd_analyze)

    compare_parser = commands.add_parser('compare', help='Compare the covers of two braids')
    compare_parser.add_argument('--left', required=True, help='First braid word')
    compare_parser.add_argument('--left-strands', required=True, type=int)
    compare_parser.add_argument('--right', required=True, help='Second braid word')
    compare_parser.add_argument('--right-strands', required=True, type=int)
    compare_parser.add_argument('--p', required=True, type=int, help='Cover degree')
    compare_parser.add_argument('--format', choices=('json', 'text'), default='text')
    compare_parser.set_defaults(handler=cmd_compare)

    catalog_parser = commands.add_parser('catalog', help='Built-in examples')
    catalog_commands = catalog_parser.add_subparsers(dest='catalog_command', required=True)

    list_parser = catalog_commands.add_parser('list', help='List catalog entries')
    list_parser.add_argument('--format', choices=('json', 'text'), default='text')
    list_parser.set_defaults(handler=cmd_catalog)

    run_parser = catalog_commands.add_parser('run', help='Run catalog entries and check expected values')
    run_parser.add_argument('--p', help="Cover degree or range, e.g. '2' or '2..5'")
    run_parser.add_argument('--family', help=f"One of: {', '.join(FAMILIES)}")
    run_parser.add_argument('--params', help="Comma separated family parameters, e.g. '3,2,3'")
    run_parser.add_argument('--jobs', type=int, default=1, help='Worker processes')
    run_parser.add_argument('--progress', action='store_true', help='Show a progress bar (needs tqdm)')
    run_parser.add_argument('--format', choices=('json', 'text'), default='text')
    run_parser.set_defaults(handler=cmd_catalog)

    return parser


def cmd_analyze(args: argparse.Namespace) -> int:
    braid = parse_braid(args.braid, args.strands)
    certificate = load_certificate(args.qp_cert) if args.qp_cert else None

    report = analyze(braid, args.p, certificate)
    if args.export:
        export_format, path = args.export
        export.write_diagram(report.diagram, path, export_format)

    _print(report.to_dict(), report.to_text(), args.format)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    left = parse_braid(args.left, args.left_strands)
    right = parse_braid(args.right, args.right_strands)

    verdict = compare(left, right, args.p)
    _print(verdict.to_dict(), verdict.to_text(), args.format)

    if verdict.conclusion is Conclusion.invariants_distinguish:
        return EXIT_DISTINGUISHED
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace) -> int:
    if args.catalog_command == 'list':
        entries = default_catalog()
        text = ''.join(
            f'{entry.name:<32} {" | ".join(str(w) for w in entry.words)}\n    {entry.provenance}\n'
            for entry in entries
        )
        _print([entry.to_dict() for entry in entries], text, args.format)
        return EXIT_OK

    params = _parse_params(args.params) if args.params else None
    if params is not None and args.family is None:
        raise errors.CatalogError('--params needs --family')
    if args.family is not None:
        build_family(args.family, params)

    degrees = util.parse_degree_range(args.p) if args.p else None
    for p in degrees or []:
        util.check_cover_degree(p)

    results = run_catalog(
        families=[args.family] if args.family else None,
        params=params,
        degrees=degrees,
        jobs=args.jobs,
        progress=args.progress,
    )
    text = ''.join(f'{r.name:<36} p={r.p:<3} {r.status}  {r.detail}\n' for r in results)
    _print([r.to_dict() for r in results], text, args.format)

    return EXIT_OK if all(r.passed for r in results) else EXIT_DISTINGUISHED


def _parse_params(text: str) -> List[int]:
    try:
        return [int(value) for value in text.split(',') if value.strip()]
    except ValueError:
        raise errors.CatalogError(f'Family parameters must be comma separated integers, got {text!r}')


def _print(data, text: str, format: str) -> None:
    sys.stdout.write(util.dumps(data) if format == 'json' else text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    logger.debug('Running %s', args.command)

    try:
        return args.handler(args)
    except errors.InconsistentClassificationError as error:
        print(f'coverforge: inconsistent classification: {error}', file=sys.stderr)
        return EXIT_INCONSISTENT
    except (errors.CoverforgeError, ValueError) as error:
        print(f'coverforge: {error}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
