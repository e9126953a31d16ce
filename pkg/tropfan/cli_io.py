"""Fan and matroid documents, and the command-line interface."""

import argparse
import contextlib
import logging
import sys
from fractions import Fraction

from tropfan.complexes import (
    bm_chain_complex, compact_cochain_complex, homology, plain_cochain_complex, star_row_complex,
)
from tropfan.config import configure_logging, resolve_threads
from tropfan.duality import (
    HOLDS, balance_witness, classify_dim1, euler_criterion, fundamental_chain,
    integral_local_tpd_criterion, is_local_tpd, is_tpd, is_uniquely_balanced,
    local_tpd_characterization,
)
from tropfan.errors import InconsistencyError, InputError, NotAComplexError
from tropfan.exact_linalg import Ring
from tropfan.fan_core import Matroid, WeightedFan, bergman_fan, build_fan, reduced_star
from tropfan.persistence import load_document, parse_text, save_document, serialize_document

logger = logging.getLogger(__name__)

FAN_FIELDS = ('ambient_rank', 'rays', 'maximal_cones', 'weights', 'ring')
COMMANDS = ('balance', 'homology', 'cohomology', 'tpd', 'local-tpd', 'euler', 'dim1',
            'star-export', 'bergman', 'star-row')
EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _read(source):
    """A document from a dict, JSON text or a file path."""
    if isinstance(source, dict):
        return source, '<document>'
    text = str(source)
    if text.lstrip().startswith('{'):
        return parse_text(text), '<text>'
    return load_document(text), f"'{text}'"


def _parse_weight(value, ring, index):
    if isinstance(value, str):
        if ring.kind != 'Q':
            raise InputError(f"weights[{index}]: rational weight {value!r} needs ring Q")
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as error:
            raise InputError(f"weights[{index}]: invalid rational {value!r}") from error
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"weights[{index}]: weight {value!r} is not an integer")
    return value


def parse_fan(source):
    """Validated WeightedFan from a fan document."""
    doc, origin = _read(source)
    if not isinstance(doc, dict):
        raise InputError(f"{origin}: a fan document must be a JSON object")
    missing = [field for field in FAN_FIELDS if field not in doc]
    if missing:
        raise InputError(f"{origin}: missing fields {missing}")
    try:
        ring = Ring.parse(doc['ring'])
        cones = doc['maximal_cones']
        weights = doc['weights']
        if not isinstance(cones, list) or not isinstance(weights, list):
            raise InputError("maximal_cones and weights must be lists")
        if len(weights) != len(cones):
            raise InputError(f"{len(weights)} weights for {len(cones)} maximal cones")
        fan = build_fan(doc['ambient_rank'], doc['rays'], cones, doc.get('faces'))
        values = {}
        for index, (cone, weight) in enumerate(zip(cones, weights)):
            values[fan.face_index[tuple(sorted(set(cone)))]] = _parse_weight(
                weight, ring, index)
        weighted = WeightedFan(fan, ring, values)
    except InputError as error:
        raise InputError(f"{origin}: {error}") from error
    logger.debug("parsed %r from %s", weighted, origin)
    return weighted


def parse_matroid(source):
    """Validated Matroid from a matroid document."""
    doc, origin = _read(source)
    if not isinstance(doc, dict) or 'ground_size' not in doc or 'bases' not in doc:
        raise InputError(f"{origin}: a matroid document needs ground_size and bases")
    if not isinstance(doc['bases'], list):
        raise InputError(f"{origin}: bases must be a list")
    try:
        return Matroid(doc['ground_size'], doc['bases'])
    except InputError as error:
        raise InputError(f"{origin}: {error}") from error


def _weight_value(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    return value


def fan_to_document(wf):
    """Canonical fan document of a weighted fan."""
    fan = wf.fan
    maximal = fan.maximal_faces()
    doc = {
        'ambient_rank': fan.ambient_rank,
        'rays': [list(ray) for ray in fan.rays],
        'maximal_cones': [list(fan.faces[alpha].ray_indices) for alpha in maximal],
        'weights': [_weight_value(wf.weights[alpha]) for alpha in maximal],
        'ring': str(wf.ring),
    }
    if not fan.simplicial:
        doc['faces'] = [list(face.ray_indices) for face in fan.faces if face.dim > 0]
    return doc


# ------------------------------------------------------------------ commands

def _report(command, inputs, results, witnesses=None):
    return {'command': command, 'inputs': inputs, 'results': results,
            'witnesses': witnesses or {}}


def _degrees(wf, args):
    if args.p is None:
        return list(range(wf.fan.dim + 1))
    if not 0 <= args.p <= wf.fan.dim:
        raise InputError(f"--p {args.p} out of range 0..{wf.fan.dim}")
    return [args.p]


def _load_fan(args):
    if not args.fan:
        raise InputError(f"{args.command} needs --fan PATH")
    wf = parse_fan(args.fan)
    if args.ring:
        wf = wf.with_ring(Ring.parse(args.ring))
    return wf


def _describe_table(table):
    return '  '.join(f"{q}: {g.describe()}" for q, g in sorted(table.groups.items()))


def cmd_balance(args, threads):
    """Balancing status and the first failing face."""
    del threads
    wf = _load_fan(args)
    witness = balance_witness(wf)
    results = {'balanced': witness is None,
               'chain': fundamental_chain(wf).to_dict()}
    if witness is None:
        results['uniquely_balanced'] = is_uniquely_balanced(wf)
    print(f"balanced over {wf.ring}: {witness is None}")
    if witness is None:
        print(f"uniquely balanced: {results['uniquely_balanced']}")
    else:
        print(f"fails at face {witness}")
    return witness is None, results, {'face': witness}


def cmd_homology(args, threads):
    """Borel-Moore homology tables of F_p."""
    wf = _load_fan(args)
    results = {}
    for p in _degrees(wf, args):
        table = homology(bm_chain_complex(wf.fan, p, wf.ring), threads)
        results[str(p)] = table.to_dict()
        print(f"H_q^BM(F_{p}) over {wf.ring}:  {_describe_table(table)}")
    return True, results, {}


def cmd_cohomology(args, threads):
    """Plain and compact-support cohomology of F^p."""
    wf = _load_fan(args)
    results = {}
    for p in _degrees(wf, args):
        plain = homology(plain_cochain_complex(wf.fan, p, wf.ring), threads)
        compact = homology(compact_cochain_complex(wf.fan, p, wf.ring), threads)
        results[str(p)] = {'plain': plain.to_dict(), 'compact': compact.to_dict()}
        print(f"H^q(F^{p}) over {wf.ring}:    {_describe_table(plain)}")
        print(f"H^q_c(F^{p}) over {wf.ring}:  {_describe_table(compact)}")
    return True, results, {}


def _print_tpd(report, label):
    print(f"{label}: TPD {report.verdict}")
    for p in sorted(report.cohomology_dims):
        print(f"  p={p}  rank H^0(F^{p}) = {report.cohomology_dims[p]}  "
              f"rank H_d^BM(F_d-{p}) = {report.homology_dims[p]}")
    for check in report.failures():
        print(f"  failed {check.kind} p={check.p} q={check.q}: {check.witness}")


def cmd_tpd(args, threads):
    """TPD certificate of the fan."""
    wf = _load_fan(args)
    report = is_tpd(wf, threads)
    _print_tpd(report, f"fan over {wf.ring}")
    witnesses = {'failures': [check.to_dict() for check in report.failures()]}
    return report.verdict, report.to_dict(), witnesses


def cmd_local_tpd(args, threads):
    """Star certificates, the characterization and the integral criterion."""
    wf = _load_fan(args)
    report = is_local_tpd(wf, threads)
    characterization = local_tpd_characterization(wf, threads, report)
    results = {'local': report.to_dict(), 'characterization': characterization.to_dict()}
    print(f"local TPD over {wf.ring}: {report.verdict}")
    print(f"  characterization: {characterization.conditions}")
    if wf.ring.kind == 'Z':
        criterion = integral_local_tpd_criterion(wf, threads, report)
        results['integral_criterion'] = criterion.to_dict()
        print(f"  integral criterion: {criterion.conditions}")
    for face in report.failing_faces():
        _print_tpd(report.sub_reports[face], f"  star of face {face}")
    return report.verdict, results, {'failing_faces': report.failing_faces()}


def cmd_euler(args, threads):
    """Tri-state Euler characteristic test per degree."""
    del threads
    wf = _load_fan(args)
    outcomes = [euler_criterion(wf, p) for p in _degrees(wf, args)]
    for outcome in outcomes:
        print(f"p={outcome.p}  (-1)^d chi = {outcome.signed_euler}  "
              f"dim F^{outcome.p}(v) = {outcome.cohomology_dim}  {outcome.status}")
    results = {str(o.p): o.to_dict() for o in outcomes}
    return all(o.status == HOLDS for o in outcomes), results, {}


def cmd_dim1(args, threads):
    """Dimension-one classification next to the direct certificate."""
    wf = _load_fan(args)
    verdict = classify_dim1(wf)
    direct = is_tpd(wf, threads).verdict
    print(f"uniquely balanced with unit weights: {verdict}  TPD: {direct}")
    return verdict, {'classification': verdict, 'tpd': direct}, {}


def cmd_star_export(args, threads):
    """Write the reduced star of a face as a fan document."""
    del threads
    wf = _load_fan(args)
    if args.face is None:
        raise InputError("star-export needs --face ID")
    doc = fan_to_document(reduced_star(wf, args.face))
    _emit_document(doc, args.output)
    return True, doc, {}


def cmd_bergman(args, threads):
    """Write the Bergman fan of a matroid as a fan document."""
    del threads
    if not args.matroid:
        raise InputError("bergman needs --matroid PATH")
    ring = Ring.parse(args.ring) if args.ring else None
    doc = fan_to_document(bergman_fan(parse_matroid(args.matroid), ring))
    _emit_document(doc, args.output)
    return True, doc, {}


def cmd_star_row(args, threads):
    """Homology of the complex of top star homologies per degree."""
    wf = _load_fan(args)
    d = wf.fan.dim
    results, exact = {}, True
    for p in _degrees(wf, args):
        table = homology(star_row_complex(wf, p, wf.ring), threads)
        row_exact = all(table.group(r).is_zero for r in range(d))
        exact = exact and row_exact
        results[str(p)] = {'homology': table.to_dict(), 'exact': row_exact}
        print(f"p={p}  {_describe_table(table)}  exact except rightmost: {row_exact}")
    return exact, results, {}


def _emit_document(doc, output):
    if output:
        save_document(output, doc)
        print(f"wrote {output}")
    else:
        sys.stdout.write(serialize_document(doc))


HANDLERS = {
    'balance': cmd_balance,
    'homology': cmd_homology,
    'cohomology': cmd_cohomology,
    'tpd': cmd_tpd,
    'local-tpd': cmd_local_tpd,
    'euler': cmd_euler,
    'dim1': cmd_dim1,
    'star-export': cmd_star_export,
    'bergman': cmd_bergman,
    'star-row': cmd_star_row,
}


def build_parser():
    """Argument parser with one subcommand per certificate."""
    parser = argparse.ArgumentParser(
        prog='tropfan',
        description='Tropical homology and Poincare duality certificates for fans.')
    parser.add_argument('--threads', default=None,
                        help='worker threads (default: $TROPFAN_THREADS or 1)')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    # flags given after the subcommand must not reset the top-level values
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--threads', default=argparse.SUPPRESS,
                        help='worker threads (default: $TROPFAN_THREADS or 1)')
    common.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS,
                        help='debug logging')
    subparsers = parser.add_subparsers(dest='command', required=True)
    for name in COMMANDS:
        sub = subparsers.add_parser(name, help=HANDLERS[name].__doc__, parents=[common])
        sub.add_argument('--fan', help='fan document (JSON)')
        sub.add_argument('--matroid', help='matroid document (JSON)')
        sub.add_argument('--ring', help="coefficient ring: Z, Q or Fp:<p>")
        sub.add_argument('--p', type=int, default=None, help='single degree p')
        sub.add_argument('--face', type=int, default=None, help='face id')
        sub.add_argument('--json', action='store_true',
                         help='print only a JSON report on stdout')
        sub.add_argument('-o', '--output', default=None, help='output path')
    return parser


def run_cli(argv=None):
    """Run one subcommand.

    Returns 0 (true / done), 1 (false), 2 (input error) or 3 (internal
    inconsistency). With ``--json`` the human-readable lines go to stderr
    and stdout holds exactly one JSON report.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return EXIT_INPUT if stop.code else EXIT_TRUE
    configure_logging(args.verbose)
    human = contextlib.redirect_stdout(sys.stderr) if args.json else contextlib.nullcontext()
    try:
        threads = resolve_threads(args.threads)
        with human:
            verdict, results, witnesses = HANDLERS[args.command](args, threads)
        inputs = {'fan': args.fan, 'matroid': args.matroid, 'ring': args.ring,
                  'p': args.p, 'face': args.face}
        report = _report(args.command, inputs, results, witnesses)
        if args.output and args.command not in ('star-export', 'bergman'):
            save_document(args.output, report)
    except InputError as error:
        logger.error("%s", error)
        return EXIT_INPUT
    except (InconsistencyError, NotAComplexError) as error:
        logger.error("internal inconsistency: %s", error)
        return EXIT_INTERNAL
    if args.json:
        sys.stdout.write(serialize_document(report))
    return EXIT_TRUE if verdict else EXIT_FALSE
