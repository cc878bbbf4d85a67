"""Reduction of extremal rational factorizations to their canonical rows.

Pipeline: check the extremal identity, orient the cycles admissibly, descend
on the Markov shadow (x, y, z) while mirroring every Markov mutation as a
cycle mutation, move the boundary to u, and finish with the tau_u power that
aligns the third cycle. The result is a certificate that any holder of the
factorization primitives can replay.
"""

import hashlib
import json
import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

from config import get_config
from persistence.registry import row_by_id, row_for_powers
from services import mcg
from services.errors import (
    ClassificationError, CodecError, FactorizationError, HypothesisError, MarkovError, MonodromyError,
)
from services.factorization import (
    Factorization, apply_mutation_word, global_conjugate, is_extremal_rational,
    make_factorization, same_factorization,
)
from services.lattice import U, HomologyClass, apply_matrix, complete_symplectic_basis, pairing
from services.markov import MarkovTriple, MarkovType, normalize_minimum, reduce_to_minimum
from services.mcg import MCGElement
from utils.codec import element_to_dict, element_from_dict, factorization_to_dict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrientedConfiguration:
    """Signed cycles C1, C2, C3 with powers (l, m, n) and boundary C."""
    cycles: Tuple[HomologyClass, HomologyClass, HomologyClass]
    powers: Tuple[int, int, int]
    boundary: HomologyClass

    @property
    def xyz(self) -> Tuple[int, int, int]:
        x, y, z = (pairing(self.boundary, c) for c in self.cycles)
        return x, y, z

    def factorization(self) -> Factorization:
        return make_factorization(zip(self.cycles, self.powers), self.boundary)


def _orientation_terms(cfg: OrientedConfiguration) -> Tuple[Tuple[int, int, int], int, int, int]:
    c1, c2, c3 = cfg.cycles
    a12, a23 = pairing(c1, c2), pairing(c2, c3)
    return cfg.xyz, a12, a23, pairing(c1, c3) + cfg.powers[1] * a12 * a23


def _orientation_checks(cfg: OrientedConfiguration) -> Tuple[bool, bool, bool, bool]:
    """Positivity of (x, y, z) and the three relations, as booleans.

    The square-root relations are checked as sign conditions plus squared,
    cross-multiplied integer identities.
    """
    l, m, n = cfg.powers
    d = 12 - l - m - n
    (x, y, z), a12, a23, w = _orientation_terms(cfg)
    return (
        min(x, y, z) > 0,
        a12 < 0 and l * m * a12 * a12 == d * n * z * z,
        a23 < 0 and m * n * a23 * a23 == d * l * x * x,
        w > 0 and l * n * w * w == d * m * y * y,
    )


def orientation_defects(cfg: OrientedConfiguration) -> List[str]:
    """Violated admissibility conditions; empty when cfg is admissible."""
    positive, first, second, third = _orientation_checks(cfg)
    if positive and first and second and third:
        return []
    (x, y, z), a12, a23, w = _orientation_terms(cfg)
    defects = []
    if not positive:
        defects.append(f"pairings {(x, y, z)} are not all positive")
    if not first:
        defects.append(f"<C1,C2> = {a12} violates the first orientation relation")
    if not second:
        defects.append(f"<C2,C3> = {a23} violates the second orientation relation")
    if not third:
        defects.append(f"<C1,C3> + m<C1,C2><C2,C3> = {w} violates the y relation")
    return defects


def is_admissible(cfg: OrientedConfiguration) -> bool:
    return all(_orientation_checks(cfg))


def _require_extremal(f: Factorization):
    try:
        ok = is_extremal_rational(f)
    except FactorizationError as e:
        raise ClassificationError('identity', str(e)) from e
    if not ok:
        raise ClassificationError('identity', "factorization is not of extremal rational type")


def compute_xyz(f: Factorization) -> Tuple[int, int, int]:
    """Signed pairings of the boundary with the three cycles as stored."""
    _require_extremal(f)
    x, y, z = (pairing(f.boundary, c) for c in f.cycles)
    return x, y, z


def admissible_orient(f: Factorization) -> OrientedConfiguration:
    """The unique sign assignment on (C1, C2, C3) that is admissible."""
    xyz = compute_xyz(f)
    if 0 in xyz:
        raise ClassificationError('orient', f"zero pairing in {xyz}; not a valid extremal configuration")
    admissible = []
    for signs in product((1, -1), repeat=3):
        cycles = tuple(c.scale(s) for c, s in zip(f.cycles, signs))
        cfg = OrientedConfiguration(cycles, f.powers, f.boundary)
        if is_admissible(cfg):
            admissible.append(cfg)
    if len(admissible) != 1:
        raise ClassificationError('orient', f"{len(admissible)} admissible orientations, expected exactly 1")
    return admissible[0]


def cycle_mutation(cfg: OrientedConfiguration, which: int) -> OrientedConfiguration:
    """Mutations 1-3 of the vanishing cycles with the matching power permutation."""
    if not is_admissible(cfg):
        defects = orientation_defects(cfg)
        raise ClassificationError('orient', f"mutation input not admissible: {'; '.join(defects)}")
    c1, c2, c3 = cfg.cycles
    l, m, n = cfg.powers
    if which == 1:
        cycles, powers = (c1, -_twist(c2, m, c3), c2), (l, n, m)
    elif which == 2:
        cycles, powers = (-_twist(c1, l, c2), c1, c3), (m, l, n)
    elif which == 3:
        cycles, powers = (c2, -_twist(c2, -m, c1), c3), (m, l, n)
    else:
        raise ClassificationError('reduce', f"unknown mutation {which}")
    mutated = OrientedConfiguration(cycles, powers, cfg.boundary)
    if not is_admissible(mutated):
        defects = orientation_defects(mutated)
        raise ClassificationError('orient', f"mutation {which} broke admissibility: {'; '.join(defects)}")
    return mutated


def _twist(c: HomologyClass, power: int, g: HomologyClass) -> HomologyClass:
    return g + c.scale(power * pairing(c, g))


@dataclass(frozen=True)
class Certificate:
    """Mutation word and conjugator carrying an input to registry row ``row``."""
    digest: str
    word: Tuple[int, ...]
    conjugator: MCGElement
    row: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'digest': self.digest,
            'word': list(self.word),
            'conjugator': element_to_dict(self.conjugator),
            'row': self.row,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Certificate':
        return cls(
            digest=_require_digest(data.get('digest')),
            word=tuple(int(w) for w in data['word']),
            conjugator=element_from_dict(data['conjugator']),
            row=int(data['row']),
        )


def _require_digest(value: Any) -> str:
    if not isinstance(value, str) or len(value) != 64:
        raise CodecError(f"certificate digest must be a 64-character sha256 hex string, got {value!r}")
    return value


def digest(f: Factorization) -> str:
    """SHA-256 of the canonical JSON form of a factorization."""
    payload = json.dumps(factorization_to_dict(f), sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(payload.encode('utf-8')).hexdigest()


def boundary_normalizer(c: HomologyClass) -> MCGElement:
    """A mapping class whose matrix sends C to u.

    With v' completing C to a symplectic basis, h = [v' | C] sends (v, u) to
    (v', C); its inverse sends C to u.
    """
    v = complete_symplectic_basis(c)
    g = ((c.q, -c.p), (-v.q, v.p))
    element = mcg.lift(g)
    if apply_matrix(element.mat, c) != U:
        raise ClassificationError('conjugate', f"normalizer {element.mat} does not send {c} to u")
    return element


def classify(f: Factorization, max_depth: Optional[int] = None,
             sum_factor: Optional[int] = None) -> Certificate:
    """Certificate carrying f to its canonical registry row."""
    settings = get_config().get('classifier', {})
    max_depth = max_depth if max_depth is not None else settings.get('normalize_max_depth', 12)
    sum_factor = sum_factor if sum_factor is not None else settings.get('normalize_sum_factor', 8)

    cfg = admissible_orient(f)
    row = row_for_powers(cfg.powers)

    shadow, shadow_type = MarkovTriple(*cfg.xyz), MarkovType.of(cfg.powers)
    try:
        minimum, minimum_type, descent = reduce_to_minimum(shadow, shadow_type)
    except MarkovError as e:
        raise ClassificationError('reduce', str(e)) from e
    try:
        _, _, bridge = normalize_minimum(minimum, minimum_type, max_depth, sum_factor)
    except MarkovError as e:
        raise ClassificationError('normalize', str(e)) from e
    word = tuple(descent + bridge)
    logger.debug(f"{cfg.powers} shadow: descent {descent}, bridge {bridge}")

    for which in word:
        cfg = cycle_mutation(cfg, which)
    if cfg.xyz != row.minimum or cfg.powers != row.powers:
        raise ClassificationError('reduce', f"mutated shadow {cfg.xyz} {cfg.powers} misses row {row.row_id}")

    normalizer = boundary_normalizer(cfg.boundary)
    cycles = tuple(apply_matrix(normalizer.mat, c) for c in cfg.cycles)
    p3, q3 = cycles[2]
    shift, remainder = divmod(row.cycles[2].q - q3, p3)
    if remainder:
        raise ClassificationError('conjugate', f"third cycle {cycles[2]} cannot be aligned with {row.cycles[2]}")
    conjugator = mcg.compose(mcg.twist(U, shift), normalizer)
    aligned = tuple(apply_matrix(conjugator.mat, c) for c in cfg.cycles)
    if aligned != row.cycles:
        raise ClassificationError('conjugate', f"conjugated cycles {aligned} differ from row {row.row_id}")

    certificate = Certificate(digest(f), word, conjugator, row.row_id)
    if not verify_certificate(f, certificate):
        raise ClassificationError('replay', "certificate does not replay to the registry row")
    logger.debug(f"classified as row {row.row_id} with word {list(word)}")
    return certificate


def verify_certificate(f: Factorization, cert: Certificate) -> bool:
    """Replay word and conjugation with factorization primitives only."""
    try:
        if cert.digest != digest(f):
            return False
        replayed = global_conjugate(apply_mutation_word(f, cert.word), cert.conjugator)
        row = row_by_id(cert.row)
    except (MonodromyError, KeyError, ValueError) as e:
        logger.debug(f"certificate replay failed: {e}")
        return False
    return same_factorization(replayed, row.factorization())


def check_intersections_identity(c1: HomologyClass, c2: HomologyClass, c3: HomologyClass,
                                 c4: HomologyClass, m: int, n: int, k: int, l: int) -> bool:
    """m n <C1,C2>^2 = l k <C3,C4>^2, given tau_1^m tau_2^n = delta tau_3^-k tau_4^-l."""
    lhs = mcg.compose(mcg.twist(c1, m), mcg.twist(c2, n))
    rhs = mcg.product([mcg.delta(), mcg.twist(c3, -k), mcg.twist(c4, -l)])
    if not mcg.equals(lhs, rhs):
        raise HypothesisError("tau_1^m tau_2^n != delta tau_3^-k tau_4^-l; the identity is vacuous")
    a12, a34 = pairing(c1, c2), pairing(c3, c4)
    return m * n * a12 * a12 == l * k * a34 * a34


def intersection_splits(f: Factorization) -> List[Tuple]:
    """The three 2+2 splits of tau_C^(12-s) tau_1^l tau_2^m tau_3^n = delta."""
    c1, c2, c3 = f.cycles
    l, m, n = f.powers
    c, d = f.boundary, 12 - sum(f.powers)
    return [
        (c1, c2, c, c3, l, m, d, n),
        (c2, c3, c1, c, m, n, l, d),
        (c3, c, c2, c1, n, d, m, l),
    ]
