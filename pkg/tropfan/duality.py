"""Fundamental chains, cap products and Poincare duality certificates.

A fan satisfies tropical Poincare duality (TPD) when every cap product
with its fundamental class is an isomorphism. For fans the cohomology is
concentrated in degree 0, so a certificate consists of two parts: the
Borel-Moore homology must vanish outside the top degree, and the degree-0
cap products F^p(v) -> H_d^BM(F_{d-p}) must be isomorphisms. Stars are
handled through their upper sets and are never subdivided.
"""

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from math import comb

from tropfan.complexes import bm_chain_complex, homology, map_jobs, star_bm_complex
from tropfan.errors import InconsistencyError, InputError
from tropfan.exact_linalg import (
    GroupPresentation, IntMatrix, determinant, is_isomorphism, kernel_basis, rank,
    solve, solve_integral,
)
from tropfan.trop_sheaf import build_multitangent, wedge_basis

logger = logging.getLogger(__name__)

VANISHING = 'vanishing'
ISOMORPHISM = 'isomorphism'

HOLDS = 'holds'
FAILS = 'fails'
HYPOTHESIS_VIOLATED = 'hypothesis-violated'


@lru_cache(maxsize=128)
def _multitangent(fan, p):
    return build_multitangent(fan, p)


@lru_cache(maxsize=256)
def _star_complex(fan, gamma, p, ring):
    if gamma == fan.vertex:
        return bm_chain_complex(fan, p, ring, _multitangent(fan, p))
    return star_bm_complex(fan, gamma, p, ring, _multitangent(fan, p))


@lru_cache(maxsize=256)
def _star_homology(fan, gamma, p, ring):
    return homology(_star_complex(fan, gamma, p, ring))


def _check_degree(fan, p, name='p'):
    if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p <= fan.dim:
        raise InputError(f"degree {name}={p!r} out of range 0..{fan.dim}")


# ---------------------------------------------------------------- contraction

def _wedge_index(m, p):
    return {subset: i for i, subset in enumerate(itertools.combinations(range(m), p))}


def contraction_sign(k_set, j_set):
    """Sign of f_K contracted against e_J for K inside J."""
    rest = [mu for mu in j_set if mu not in k_set]
    inversions = sum(1 for lam in k_set for mu in rest if lam > mu)
    p1 = len(k_set)
    return -1 if (inversions + p1 * (p1 - 1) // 2) % 2 else 1


def contraction_matrix(m, p1, p2, y):
    """Matrix of x -> x contracted against y, from wedge^p1 M* to wedge^(p2-p1) M.

    ``y`` is given in lex wedge-monomial coordinates of wedge^p2 M.
    """
    if not all(isinstance(k, int) for k in (m, p1, p2)) or not 0 <= p1 <= p2 <= m:
        raise InputError(f"degree mismatch: need 0 <= {p1} <= {p2} <= {m}")
    if len(y) != comb(m, p2):
        raise InputError(f"element of degree {p2} needs {comb(m, p2)} coordinates")
    rows = _wedge_index(m, p2 - p1)
    cols = _wedge_index(m, p1)
    data = [[0] * len(cols) for _ in range(len(rows))]
    for j_set, coeff in zip(itertools.combinations(range(m), p2), y):
        if not coeff:
            continue
        for k_set in itertools.combinations(j_set, p1):
            rest = tuple(mu for mu in j_set if mu not in k_set)
            data[rows[rest]][cols[k_set]] += contraction_sign(k_set, j_set) * coeff
    return IntMatrix(len(rows), len(cols), data)


def contract(x, y, m, p1, p2):
    """Contraction of x in wedge^p1 M* against y in wedge^p2 M."""
    if len(x) != comb(m, p1):
        raise InputError(f"element of degree {p1} needs {comb(m, p1)} coordinates")
    matrix = contraction_matrix(m, p1, p2, y)
    return (matrix @ IntMatrix.from_columns([list(x)], len(x))).column(0)


# ---------------------------------------------------------- fundamental chain

class FundamentalChain:
    """The top chain (w(alpha) Lambda_alpha) in the stored F_d bases.

    ``coordinates`` are integral (over Q the weights are cleared of
    denominators by a unit) and feed every matrix computation; ``values``
    are the coefficients in the ring itself.
    """

    def __init__(self, coordinates, layout, ring, values=None):
        """Store alpha -> coefficient and the top-degree layout."""
        self.coordinates = dict(coordinates)
        self.values = dict(values if values is not None else coordinates)
        self.layout = list(layout)
        self.ring = ring

    @property
    def vector(self):
        """Integral coefficients in layout order."""
        return [self.coordinates[alpha] for alpha, _, _ in self.layout]

    def restricted(self, layout):
        """Integral coefficients on the maximal faces of another layout."""
        return [self.coordinates[alpha] for alpha, _, _ in layout]

    def to_dict(self):
        """Ring coefficients keyed by maximal face id; rationals as 'a/b'."""
        return {str(alpha): _plain_value(value)
                for alpha, value in sorted(self.values.items())}

    def __repr__(self):
        return f"FundamentalChain({self.vector}, ring={self.ring})"


def _plain_value(value):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    return value


def fundamental_chain(wf):
    """Fundamental chain of a weighted fan over its ring."""
    fan = wf.fan
    d = fan.dim
    module = _multitangent(fan, d)
    weights = wf.integral_weights()
    coordinates, values = {}, {}
    for alpha in fan.maximal_faces():
        generator = wedge_basis(fan.faces[alpha].lattice_basis, d)
        sign = solve_integral(module.basis(alpha), generator)[0, 0]
        coordinates[alpha] = wf.ring.reduce(weights[alpha] * sign)
        if wf.ring.kind == 'Q':
            values[alpha] = wf.weights[alpha] * sign
        else:
            values[alpha] = coordinates[alpha]
    layout = _star_complex(fan, fan.vertex, d, wf.ring).layout[d]
    return FundamentalChain(coordinates, layout, wf.ring, values)


def _chain_column(values):
    return IntMatrix.from_columns([values], len(values))


def _boundary_of_chain(wf, gamma, chain=None):
    fan = wf.fan
    chain = chain or fundamental_chain(wf)
    complex_ = _star_complex(fan, gamma, fan.dim, wf.ring)
    values = chain.restricted(complex_.layout[fan.dim])
    return complex_, complex_.boundary_out(fan.dim) @ _chain_column(values)


def balance_witness(wf):
    """First face where the boundary of the fundamental chain is nonzero, or None."""
    fan = wf.fan
    complex_, residual = _boundary_of_chain(wf, fan.vertex)
    column = residual.column(0)
    for face, offset, size in complex_.layout.get(fan.dim - 1, []):
        if any(not wf.ring.is_zero(x) for x in column[offset:offset + size]):
            return face
    return None


def is_balanced(wf):
    """True if the fundamental chain is a Borel-Moore cycle."""
    _, residual = _boundary_of_chain(wf, wf.fan.vertex)
    return residual.is_zero(wf.ring)


def _require_balanced(wf):
    witness = balance_witness(wf)
    if witness is not None:
        raise InputError(f"fan is not balanced over {wf.ring}: fails at face {witness}")


def _uniquely_balanced_at(wf, gamma, chain):
    fan = wf.fan
    complex_ = _star_complex(fan, gamma, fan.dim, wf.ring)
    cycles = kernel_basis(complex_.boundary_out(fan.dim), wf.ring)
    if cycles.cols != 1:
        return False
    values = _chain_column(chain.restricted(complex_.layout[fan.dim]))
    coefficient = solve(cycles, values, wf.ring)[0, 0]
    return wf.ring.is_unit(coefficient)


def is_uniquely_balanced(wf):
    """True if the fundamental class generates H_d^BM(F_d)."""
    _require_balanced(wf)
    return _uniquely_balanced_at(wf, wf.fan.vertex, fundamental_chain(wf))


def stars_balanced_check(wf):
    """Check that the fundamental chain restricts to a cycle on every star."""
    _require_balanced(wf)
    chain = fundamental_chain(wf)
    for gamma in wf.fan.face_ids:
        _, residual = _boundary_of_chain(wf, gamma, chain)
        if not residual.is_zero(wf.ring):
            raise InconsistencyError(f"star of face {gamma} is not balanced")
    return True


# ---------------------------------------------------------------- cap product

class CapProduct:
    """Degree-0 cap product of a star, F^p(gamma) -> H_d^BM(Star gamma, F_{d-p}).

    ``images`` holds the chain-level images of the dual basis of F^p(gamma)
    in the top-degree chains, ``cycles`` a kernel basis of the top
    boundary and ``coordinates`` the images written in that basis.
    """

    def __init__(self, face, p, images, cycles, coordinates, layout, ring):
        """Store the map data."""
        self.face = face
        self.p = p
        self.images = images
        self.cycles = cycles
        self.coordinates = coordinates
        self.layout = layout
        self.ring = ring

    @property
    def domain_rank(self):
        """Rank of F^p(gamma)."""
        return self.coordinates.cols

    @property
    def codomain_rank(self):
        """Rank of H_d^BM(Star gamma, F_{d-p})."""
        return self.cycles.cols

    def is_isomorphism(self):
        """True if the map is bijective over the ring."""
        return is_isomorphism(self.coordinates,
                              GroupPresentation.free(self.domain_rank, self.ring),
                              GroupPresentation.free(self.codomain_rank, self.ring),
                              self.ring)

    def is_injective(self):
        """True if the map has trivial kernel over the ring."""
        return rank(self.coordinates, self.ring) == self.domain_rank

    def witness(self):
        """Reason the map fails to be an isomorphism, or None."""
        if self.domain_rank != self.codomain_rank:
            return f"rank {self.domain_rank} -> {self.codomain_rank}"
        if self.is_isomorphism():
            return None
        return f"determinant {determinant(self.coordinates)}"


def _contraction_block(fan, alpha, p, iota, modules):
    """Contract the dual basis (pulled back by ``iota``) against Lambda_alpha."""
    module_p, module_dual = modules
    basis = fan.faces[alpha].lattice_basis
    d = basis.cols
    to_stored = solve_integral(module_p.basis(alpha), wedge_basis(basis, p))
    values = (iota @ to_stored).transpose()
    contraction = contraction_matrix(d, p, d, [1])
    from_wedge = solve_integral(module_dual.basis(alpha), wedge_basis(basis, d - p))
    return from_wedge @ contraction @ values


def _place(data, block, row0, col0):
    for i in range(block.rows):
        for j in range(block.cols):
            data[row0 + i][col0 + j] += block[i, j]


def cap_star(wf, gamma, p):
    """Cap product with the fundamental class of Star(gamma) in degree 0."""
    fan = wf.fan
    fan.check_face(gamma)
    _check_degree(fan, p)
    d = fan.dim
    modules = (_multitangent(fan, p), _multitangent(fan, d - p))
    complex_ = _star_complex(fan, gamma, d - p, wf.ring)
    layout = complex_.layout[d]
    weights = wf.integral_weights()
    width = modules[0].rank(gamma)
    data = [[0] * width for _ in range(complex_.rank(d))]
    for alpha, row0, _ in layout:
        iota = modules[0].structure_map(alpha, gamma)
        block = _contraction_block(fan, alpha, p, iota, modules).scale(weights[alpha])
        _place(data, block, row0, 0)
    images = IntMatrix(complex_.rank(d), width, data)
    boundary = complex_.boundary_out(d)
    if not (boundary @ images).is_zero(wf.ring):
        raise InconsistencyError(f"cap image outside the kernel at face {gamma}, p={p}")
    cycles = kernel_basis(boundary, wf.ring)
    coordinates = solve(cycles, images, wf.ring)
    logger.debug("cap at face %d, p=%d: %d -> %d", gamma, p, width, cycles.cols)
    return CapProduct(gamma, p, images, cycles, coordinates, layout, wf.ring)


def cap_q0(wf, p):
    """Cap product F^p(v) -> H_d^BM(F_{d-p}) of the whole fan."""
    return cap_star(wf, wf.fan.vertex, p)


def cap_chain_general(wf, p, q):
    """Chain-level cap product C^q(F^p) -> C_{d-q}^BM(F_{d-p}).

    The cochains live on compact cells, and the vertex is the only compact
    cell of a fan, so the domain is zero unless q = 0.
    """
    fan = wf.fan
    _check_degree(fan, p)
    _check_degree(fan, q, 'q')
    d = fan.dim
    modules = (_multitangent(fan, p), _multitangent(fan, d - p))
    target = _star_complex(fan, fan.vertex, d - p, wf.ring)
    compact = [fan.vertex] if q == 0 else []
    domain, width = [], 0
    for gamma in compact:
        domain.append((gamma, width))
        width += modules[0].rank(gamma)
    weights = wf.integral_weights()
    data = [[0] * width for _ in range(target.rank(d - q))]
    for tau, row0, _ in target.layout.get(d - q, []):
        for gamma, col0 in domain:
            for alpha in fan.maximal_cofaces(tau):
                if not fan.is_face_of(gamma, alpha):
                    continue
                iota = modules[0].structure_map(alpha, gamma)
                block = _contraction_block(fan, alpha, p, iota, modules)
                block = modules[1].structure_map(alpha, tau) @ block
                _place(data, block.scale(weights[alpha]), row0, col0)
    return IntMatrix(target.rank(d - q), width, data)


# ------------------------------------------------------------------- reports

class TpdCheck:
    """One row of a TPD certificate."""

    def __init__(self, p, q, kind, passed, witness=None):
        """``kind`` is VANISHING for H_q^BM(F_p) or ISOMORPHISM for the cap in p."""
        self.p = p
        self.q = q
        self.kind = kind
        self.passed = passed
        self.witness = witness

    def to_dict(self):
        """Dictionary representation."""
        return {'p': self.p, 'q': self.q, 'kind': self.kind,
                'passed': self.passed, 'witness': self.witness}

    def __repr__(self):
        mark = 'ok' if self.passed else f'FAIL ({self.witness})'
        return f"TpdCheck({self.kind}, p={self.p}, q={self.q}, {mark})"


class TpdReport:
    """TPD certificate of a fan or of the star of one face."""

    def __init__(self, face, checks, cohomology_dims=None, homology_dims=None,
                 sub_reports=None):
        """Store the checks; ``sub_reports`` maps face id to a star report."""
        self.face = face
        self.checks = list(checks)
        self.cohomology_dims = dict(cohomology_dims or {})
        self.homology_dims = dict(homology_dims or {})
        self.sub_reports = dict(sub_reports or {})

    @property
    def verdict(self):
        """True when every check and every sub-report passes."""
        return (all(check.passed for check in self.checks)
                and all(r.verdict for r in self.sub_reports.values()))

    def failures(self):
        """The failing checks of this report."""
        return [check for check in self.checks if not check.passed]

    def failing_faces(self):
        """Face ids whose star reports fail."""
        return [face for face, r in sorted(self.sub_reports.items()) if not r.verdict]

    def to_dict(self):
        """Dictionary representation with nested star reports."""
        result = {
            'face': self.face,
            'verdict': self.verdict,
            'checks': [check.to_dict() for check in self.checks],
            'cohomology_dims': {str(p): n for p, n in sorted(self.cohomology_dims.items())},
            'homology_dims': {str(p): n for p, n in sorted(self.homology_dims.items())},
        }
        if self.sub_reports:
            result['stars'] = {str(face): r.to_dict()
                               for face, r in sorted(self.sub_reports.items())}
        return result


def _certify_face(wf, gamma, threads=1):
    fan = wf.fan
    d = fan.dim

    def per_degree(p):
        checks = []
        table = _star_homology(fan, gamma, p, wf.ring)
        for q, group in sorted(table.groups.items()):
            if q != d:
                checks.append(TpdCheck(p, q, VANISHING, group.is_zero,
                                       None if group.is_zero else group.describe()))
        cap = cap_star(wf, gamma, p)
        passed = cap.is_isomorphism()
        checks.append(TpdCheck(p, 0, ISOMORPHISM, passed, None if passed else cap.witness()))
        return checks, cap.domain_rank, cap.codomain_rank

    results = map_jobs(per_degree, range(d + 1), threads)
    checks = [check for row, _, _ in results for check in row]
    cohomology_dims = {p: row[1] for p, row in enumerate(results)}
    homology_dims = {p: row[2] for p, row in enumerate(results)}
    report = TpdReport(gamma, checks, cohomology_dims, homology_dims)
    logger.debug("face %d: TPD %s", gamma, report.verdict)
    return report


def is_tpd(wf, threads=1):
    """TPD certificate of the whole fan."""
    _require_balanced(wf)
    return _certify_face(wf, wf.fan.vertex, threads)


def star_tpd(wf, gamma, threads=1):
    """TPD certificate of Star(gamma)."""
    wf.fan.check_face(gamma)
    _require_balanced(wf)
    return _certify_face(wf, gamma, threads)


def is_local_tpd(wf, threads=1):
    """Local TPD certificate: one star report per face, the vertex included."""
    _require_balanced(wf)
    faces = wf.fan.face_ids
    reports = map_jobs(lambda gamma: _certify_face(wf, gamma), faces, threads)
    return TpdReport(None, [], sub_reports=dict(zip(faces, reports)))


# ------------------------------------------------------------ Euler criterion

class EulerResult:
    """Outcome of the Euler characteristic test in one degree p."""

    def __init__(self, p, status, signed_euler, cohomology_dim, witness=None):
        """``witness`` is the first nonzero lower degree when the hypothesis fails."""
        self.p = p
        self.status = status
        self.signed_euler = signed_euler
        self.cohomology_dim = cohomology_dim
        self.witness = witness

    @property
    def equal(self):
        """True if (-1)^d chi equals dim F^p(v)."""
        return self.signed_euler == self.cohomology_dim

    def to_dict(self):
        """Dictionary representation."""
        return {'p': self.p, 'status': self.status, 'signed_euler': self.signed_euler,
                'cohomology_dim': self.cohomology_dim, 'equal': self.equal,
                'witness': self.witness}


def euler_criterion(wf, p):
    """Compare (-1)^d chi(C^BM(F_{d-p})) with dim F^p(v) over a field.

    The comparison decides the cap product in degree p only when the
    Borel-Moore homology of F_{d-p} vanishes below the top degree; that
    hypothesis is checked and reported as HYPOTHESIS_VIOLATED when it fails.
    """
    fan = wf.fan
    if not wf.ring.is_field:
        raise InputError("the Euler criterion needs a field; use Q or Fp")
    _check_degree(fan, p)
    d = fan.dim
    complex_ = _star_complex(fan, fan.vertex, d - p, wf.ring)
    signed = (-1) ** d * sum((-1) ** q * complex_.rank(q) for q in complex_.degrees)
    dim = _multitangent(fan, p).rank(fan.vertex)
    witness = _star_homology(fan, fan.vertex, d - p, wf.ring).first_nonzero_except(d)
    if witness is not None:
        status = HYPOTHESIS_VIOLATED
        logger.warning("Euler criterion for p=%d: H_%d^BM(F_%d) is nonzero", p, witness, d - p)
    else:
        status = HOLDS if signed == dim else FAILS
    return EulerResult(p, status, signed, dim, witness)


def classify_dim1(wf):
    """One-dimensional fans: TPD iff uniquely balanced with unit weights."""
    if wf.fan.dim != 1:
        raise InputError(f"dimension-one classification on a fan of dimension {wf.fan.dim}")
    return is_uniquely_balanced(wf) and wf.all_weights_units()


# ---------------------------------------------------- characterizations

class CharacterizationReport:
    """Conditions of a local TPD criterion next to the direct verdict."""

    def __init__(self, name, conditions, direct_verdict, witness=None):
        """``conditions`` maps condition names to booleans."""
        self.name = name
        self.conditions = dict(conditions)
        self.direct_verdict = direct_verdict
        self.witness = witness

    @property
    def verdict(self):
        """True when every condition holds."""
        return all(self.conditions.values())

    @property
    def agrees(self):
        """True when the criterion matches the direct certificate."""
        return self.verdict == self.direct_verdict

    def to_dict(self):
        """Dictionary representation."""
        return {'name': self.name, 'conditions': dict(self.conditions),
                'verdict': self.verdict, 'direct_verdict': self.direct_verdict,
                'witness': self.witness}


class TheoremCheck:
    """Hypotheses and conclusion of a duality theorem on one fan."""

    def __init__(self, name, hypotheses, conclusion, details=None):
        """``hypotheses`` maps names to booleans; ``conclusion`` is a boolean."""
        self.name = name
        self.hypotheses = dict(hypotheses)
        self.conclusion = conclusion
        self.details = dict(details or {})

    @property
    def status(self):
        """HOLDS, FAILS or HYPOTHESIS_VIOLATED."""
        if not all(self.hypotheses.values()):
            return HYPOTHESIS_VIOLATED
        return HOLDS if self.conclusion else FAILS

    def to_dict(self):
        """Dictionary representation."""
        return {'name': self.name, 'hypotheses': dict(self.hypotheses),
                'conclusion': self.conclusion, 'status': self.status,
                'details': dict(self.details)}


def _stars_vanish(wf, faces, threads=1):
    """(True, None) if every star homology vanishes off the top degree."""
    fan = wf.fan
    jobs = [(gamma, p) for gamma in faces for p in range(fan.dim + 1)]

    def first_bad(job):
        gamma, p = job
        q = _star_homology(fan, gamma, p, wf.ring).first_nonzero_except(fan.dim)
        return None if q is None else {'face': gamma, 'p': p, 'q': q}

    witnesses = [w for w in map_jobs(first_bad, jobs, threads) if w is not None]
    return (not witnesses), (witnesses[0] if witnesses else None)


def _checked_agreement(report):
    if not report.agrees:
        raise InconsistencyError(
            f"{report.name}: criterion {report.verdict} but direct certificate "
            f"{report.direct_verdict}")
    return report


def local_tpd_characterization(wf, threads=1, local_report=None):
    """Local TPD via star vanishing plus TPD of the codimension-one stars."""
    _require_balanced(wf)
    fan = wf.fan
    local_report = local_report or is_local_tpd(wf, threads)
    vanish, witness = _stars_vanish(wf, fan.face_ids, threads)
    codim_one = fan.faces_of_dim(fan.dim - 1)
    stars_ok = all(local_report.sub_reports[beta].verdict for beta in codim_one)
    report = CharacterizationReport(
        'local-tpd-characterization',
        {'stars_vanish': vanish, 'codim1_stars_tpd': stars_ok},
        local_report.verdict, witness)
    return _checked_agreement(report)


def integral_local_tpd_criterion(wf, threads=1, local_report=None):
    """Local TPD over Z via vanishing, weights +-1 and unique balancing in codimension one."""
    if wf.ring.kind != 'Z':
        raise InputError(f"the integral criterion needs ring Z, got {wf.ring}")
    _require_balanced(wf)
    fan = wf.fan
    local_report = local_report or is_local_tpd(wf, threads)
    vanish, witness = _stars_vanish(wf, fan.face_ids, threads)
    chain = fundamental_chain(wf)
    unique = all(_uniquely_balanced_at(wf, beta, chain)
                 for beta in fan.faces_of_dim(fan.dim - 1))
    report = CharacterizationReport(
        'integral-local-tpd',
        {'stars_vanish': vanish, 'weights_unit': wf.all_weights_units(),
         'codim1_stars_uniquely_balanced': unique},
        local_report.verdict, witness)
    return _checked_agreement(report)


def tpd_from_stars_check(wf, threads=1):
    """Global TPD from vanishing homology and TPD of every proper star.

    For two-dimensional fans over a field with vanishing homology the
    converse direction through the ray stars is checked as well.
    """
    fan = wf.fan
    if fan.dim < 2:
        raise InputError("the star criterion needs a fan of dimension >= 2")
    _require_balanced(wf)
    vanish, witness = _stars_vanish(wf, [fan.vertex], threads)
    proper = [gamma for gamma in fan.face_ids if gamma != fan.vertex]
    star_reports = dict(zip(proper, map_jobs(lambda g: _certify_face(wf, g), proper,
                                             threads)))
    conclusion = _certify_face(wf, fan.vertex, threads).verdict
    details = {'vanishing_witness': witness,
               'failing_stars': [g for g, r in star_reports.items() if not r.verdict]}
    check = TheoremCheck('tpd-from-stars',
                         {'homology_vanishes': vanish,
                          'proper_stars_tpd': not details['failing_stars']},
                         conclusion, details)
    if check.status == FAILS:
        raise InconsistencyError("proper stars are TPD with vanishing homology, "
                                 "but the fan is not")
    if fan.dim == 2 and wf.ring.is_field and vanish:
        rays_tpd = all(star_reports[tau].verdict for tau in fan.faces_of_dim(1))
        check.details['ray_stars_tpd'] = rays_tpd
        if rays_tpd != conclusion:
            raise InconsistencyError("ray stars and global TPD disagree in dimension two")
    if check.status == HYPOTHESIS_VIOLATED:
        logger.warning("star criterion not applicable: %s", details)
    return check
