"""
Schubert Smoothness and Irreducibility Certificates
One-sided certificates that V(L_w) equals the orbital variety of w
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple, Union

from errors import CertificateError
from hc_classification import OrbitDescriptor, canonical_elements, classify
from logs import logger, log_exceptions
from permutations import (
    Perm, PatternOccurrence, find_smooth_obstruction, inverse, is_good_full, render_perm,
)
from rsk import cell_members_of, cell_relation, insertion_tableau
from tableaux import StandardTableau
import config


class Verdict(str, Enum):
    SMOOTH_SCHUBERT = "SmoothSchubert"
    HC_MODULE = "HCModule"
    GOOD_FULL_CELL_MATE = "GoodFullCellMate"
    NOT_CERTIFIED = "NotCertified"


@dataclass(frozen=True)
class GoodFullWitness:
    u: Perm
    size: Tuple[int, int]
    via_inverse: bool = False  # u sits in the right cell of w^-1

    def to_json(self) -> dict:
        data = {"u": render_perm(self.u), "size": list(self.size)}
        if self.via_inverse:
            data["via_inverse"] = True
        return data


@dataclass(frozen=True)
class Diagnostics:
    pattern_in_w: Optional[PatternOccurrence]
    pattern_in_inverse: Optional[PatternOccurrence]
    cell_searched: bool

    def to_json(self) -> dict:
        return {
            "pattern_in_w": _occurrence_json(self.pattern_in_w),
            "pattern_in_w_inverse": _occurrence_json(self.pattern_in_inverse),
            "cell_searched": self.cell_searched,
        }


Witness = Union[None, OrbitDescriptor, GoodFullWitness, Diagnostics]


@dataclass(frozen=True)
class Certificate:
    w: Perm
    verdict: Verdict
    witness: Witness = None

    @property
    def certified(self) -> bool:
        return self.verdict is not Verdict.NOT_CERTIFIED

    def to_json(self) -> dict:
        data = {"w": render_perm(self.w), "verdict": self.verdict.value}
        if self.witness is not None:
            data["witness"] = self.witness.to_json()
        return data


def _occurrence_json(occurrence: Optional[PatternOccurrence]):
    return None if occurrence is None else occurrence.to_json()


def is_schubert_smooth(w: Perm) -> Tuple[bool, Optional[PatternOccurrence]]:
    """X_w is smooth iff w avoids 3412 and 4231; otherwise return the first occurrence"""
    occurrence = find_smooth_obstruction(w)
    return occurrence is None, occurrence


@lru_cache(maxsize=config.CELL_CACHE_SIZE)
def _cell_good_full_witness(P: StandardTableau) -> Optional[Tuple[Perm, Tuple[int, int]]]:
    """First good full member of the right cell with insertion tableau P"""
    for u in cell_members_of(P):
        size = is_good_full(u)
        if size is not None:
            return u, size
    return None


def _search_good_full(w: Perm) -> Optional[GoodFullWitness]:
    found = _cell_good_full_witness(insertion_tableau(w))
    if found is not None:
        return GoodFullWitness(found[0], found[1], via_inverse=False)
    found = _cell_good_full_witness(insertion_tableau(inverse(w)))
    if found is not None:
        return GoodFullWitness(found[0], found[1], via_inverse=True)
    return None


def validate_certificate(w: Perm, cert: Certificate) -> bool:
    """Re-check the invariant that the verdict promises"""
    verdict, witness = cert.verdict, cert.witness

    if verdict is Verdict.SMOOTH_SCHUBERT:
        return find_smooth_obstruction(w) is None

    if verdict is Verdict.HC_MODULE:
        w_pqm, _ = canonical_elements(witness.p, witness.q, witness.m)
        orbits = [s.orbit for s in classify(w).signatures]
        return cell_relation(w, w_pqm).same_right and witness in orbits

    if verdict is Verdict.GOOD_FULL_CELL_MATE:
        anchor = inverse(w) if witness.via_inverse else w
        return (is_good_full(witness.u) == witness.size
                and cell_relation(anchor, witness.u).same_right)

    # NotCertified only claims that every clause was tried and failed
    return witness.pattern_in_w is not None and not classify(w).signatures


@log_exceptions
def certify(w: Perm, search_cells: bool = True) -> Certificate:
    """
    Try, in order: smooth Schubert variety, Harish-Chandra module, good
    full element in the right cell of w or of w^-1

    NotCertified means "not certified by these criteria", never "reducible".
    The cell search is skipped when n exceeds config.ENUMERATION_MAX_N.
    """
    smooth, occurrence = is_schubert_smooth(w)
    if smooth:
        cert = Certificate(w, Verdict.SMOOTH_SCHUBERT)
    else:
        classification = classify(w)
        if classification.signatures:
            cert = Certificate(w, Verdict.HC_MODULE, classification.signatures[0].orbit)
        else:
            witness = None
            cell_searched = search_cells and w.n <= config.ENUMERATION_MAX_N
            if cell_searched:
                witness = _search_good_full(w)
            elif search_cells:
                logger.warning(f"Cell search skipped for {w}: n={w.n} exceeds "
                               f"bound {config.ENUMERATION_MAX_N}")

            if witness is not None:
                cert = Certificate(w, Verdict.GOOD_FULL_CELL_MATE, witness)
            else:
                diagnostics = Diagnostics(
                    pattern_in_w=occurrence,
                    pattern_in_inverse=find_smooth_obstruction(inverse(w)),
                    cell_searched=cell_searched,
                )
                cert = Certificate(w, Verdict.NOT_CERTIFIED, diagnostics)

    if not validate_certificate(w, cert):
        raise CertificateError(f"certificate {cert.verdict.value} for {w} failed re-validation")
    logger.debug(f"certify {w}: {cert.verdict.value}")
    return cert
