#!/usr/bin/python
"""
The computation routes behind each check. A route returns a detail string on success, raises
BudgetExceeded to be reported SKIPPED and any other HochschildError to be reported FAIL.
"""

import logging
import threading
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from hochschild.algebras.algebra import Algebra
from hochschild.algebras.module import Bimodule
from hochschild.cohomology.hochschild_complex import HochschildComplex, feasible_max_degree
from hochschild.enums.check_name import CheckName
from hochschild.errors import OracleStopped, RouteMismatch
from hochschild.jobs.job_spec import JobSpec
from hochschild.jobs.report import Report
from hochschild.rankone.adjoint_route import adjoint_route
from hochschild.rankone.bg_complex import BGComplex
from hochschild.rankone.chain_maps import ChainMaps
from hochschild.rankone.cup_small import verify_cup_agreement
from hochschild.rankone.ring_presentation import ring_presentation
from hochschild.smashext.cocycle_lift import verify_lifts
from hochschild.smashext.delta import d_subalgebra, verify_delta
from hochschild.smashext.ext_d import ext_D_dims, ext_d_complex, ext_d_feasible_degree, hom_d_spot_check
from hochschild.smashext.gamma import gamma_iso_D
from hochschild.smashext.hopf_hochschild import HopfHochschildComplex

LOGGER = logging.getLogger(__name__)


def compare_dims(route: str, dims: List[int], expected: List[int]) -> None:
    """:raises: RouteMismatch on the first disagreeing degree"""
    for m, (got, want) in enumerate(zip(dims, expected)):
        if got != want:
            raise RouteMismatch("%s gives dim %d in degree %d, bg complex gives %d" % (route, got, m, want))


def oracle_outcome(route: str, dims: List[int], expected: List[int], wanted: int) -> str:
    """Compare whatever an oracle computed, then skip if it stopped short of `wanted`."""
    compare_dims(route, dims, expected)
    if len(dims) < wanted + 1:
        raise OracleStopped("%s up to degree %d" % (route, wanted), len(dims) - 1, wanted)
    return "%s agrees in degrees 0..%d" % (route, len(dims) - 1)


class JobContext:
    """Shared state of one job. Routes read it from worker threads; writes go through the lock."""

    def __init__(self, spec: JobSpec, report: Report):
        self.spec = spec
        self.data = spec.data
        self.report = report
        self.max_degree = spec.max_degree
        self.oracle_degree = min(spec.oracle_max_degree, spec.max_degree)
        self.lock = threading.Lock()
        self._maps_lock = threading.Lock()
        self._iso_lock = threading.Lock()
        self._d_lock = threading.Lock()
        self.bg = BGComplex(self.data, self.max_degree)
        self.bg_dims = self.bg.cohomology_dims(self.max_degree)
        self._maps = None
        self._iso = None
        self._d = None

    def maps(self) -> ChainMaps:
        with self._maps_lock:
            if self._maps is None:
                self._maps = ChainMaps(self.data, max(self.max_degree, 1), self.bg.resolution)
            return self._maps

    def has_maps(self) -> bool:
        return self._maps is not None

    def d_subalgebra(self) -> Tuple[Algebra, np.ndarray]:
        with self._d_lock:
            if self._d is None:
                self._d = d_subalgebra(self.data)
            return self._d

    def iso(self):
        with self._iso_lock:
            if self._iso is None:
                self._iso = gamma_iso_D(self.data, d=self.d_subalgebra())
            return self._iso

    def record(self, key: str, value) -> None:
        with self.lock:
            self.report.extras[key] = value

    def add_dims(self, route: str, dims: List[int]) -> None:
        with self.lock:
            self.report.add_dims(route, dims)


def run_bg(context: JobContext) -> str:
    data = context.data
    closed_form = data.closed_form_dims(context.max_degree)
    compare_dims("closed form", closed_form, context.bg_dims)
    for m in range(context.max_degree + 1):
        classes = context.bg.closed_form_classes(m)
        if not context.bg.cohomology(m).is_basis([c.representative for c in classes]):
            raise RouteMismatch("Closed-form classes are not a basis of HH^%d" % m)
    return "bg dims match the closed form in degrees 0..%d" % context.max_degree


def run_ring(context: JobContext) -> str:
    data = context.data
    presentation = ring_presentation(data, context.max_degree, context.bg, context.maps())
    with context.lock:
        context.report.ring = presentation.to_dict()
    detail = "%d products verified, deg y = %d" % (len(presentation.table), presentation.y_degree)
    top = min(context.oracle_degree, ext_d_feasible_degree(data, normalized=True))
    if top < 0:
        return detail
    invariant = ext_d_complex(data, top, normalized=True)
    compared = verify_cup_agreement(context.bg, context.maps(), invariant, top)
    context.record("cup_agreement", {"max_degree": top, "products": compared})
    return "%s, %d cup products agree with the invariant complex" % (detail, compared)


def run_chainmaps(context: JobContext) -> str:
    maps = context.maps()
    context.record("sign_convention", maps.sign_convention())
    return "phi and psi are equivariant chain maps up to degree %d" % maps.max_degree


def run_ext_d(context: JobContext) -> str:
    data = context.data
    top = min(context.oracle_degree, ext_d_feasible_degree(data))
    if top < 0:
        raise OracleStopped("Ext over D", -1, context.oracle_degree)
    complex_ = ext_d_complex(data, top)
    dims = ext_D_dims(data, top, complex_)
    context.add_dims("ext_d", dims)
    spot = hom_d_spot_check(data, complex_, embedding=context.d_subalgebra()[1])
    context.record("hom_d_spot_check", {str(m): entry for m, entry in spot.items()})
    for m, entry in spot.items():
        if entry["hom_d"] != entry["invariant"]:
            raise RouteMismatch("Hom_D has dim %d in degree %d, invariant cochains %d"
                                % (entry["hom_d"], m, entry["invariant"]))
    normalized_top = min(top, ext_d_feasible_degree(data, normalized=True))
    normalized = ext_d_complex(data, normalized_top, normalized=True).cohomology_dims(normalized_top)
    context.add_dims("invariant", normalized)
    compare_dims("normalized invariant complex", normalized, context.bg_dims)
    return oracle_outcome("Ext over D", dims, context.bg_dims, context.oracle_degree)


def run_bar(context: JobContext) -> str:
    data = context.data
    B = data.B
    bimodule = Bimodule.regular(B)
    top = min(context.oracle_degree, feasible_max_degree(B, bimodule))
    if top < 0:
        raise OracleStopped("bar complex of B", -1, context.oracle_degree)
    bar = HochschildComplex(B, bimodule, top)
    dims = bar.cohomology_dims(top)
    context.add_dims("bar", dims)
    compare_dims("bar complex", dims, context.bg_dims)
    lifts = verify_lifts(context.bg, context.maps(), bar)
    context.record("cocycle_lifts", {str(m): entry for m, entry in lifts.items()})
    return oracle_outcome("bar complex", dims, context.bg_dims, context.oracle_degree)


def run_adjoint(context: JobContext) -> str:
    result = adjoint_route(context.data, context.max_degree)
    context.add_dims("adjoint", result["dims"])
    context.record("adjoint_summands", result["summands"])
    compare_dims("adjoint route", result["dims"], context.bg_dims)
    return "adjoint route agrees in degrees 0..%d" % context.max_degree


def run_gamma(context: JobContext) -> str:
    data = context.data
    _, embedding = context.d_subalgebra()
    verify_delta(data, embedding)
    iso = context.iso()
    context.record("gamma", iso.to_dict())
    return "Gamma -> D verified on %d basis pairs" % iso.pairs_checked


def run_hopf_hochschild(context: JobContext) -> str:
    data = context.data
    complex_ = HopfHochschildComplex(data, context.iso())
    result = complex_.feasible_dims(context.oracle_degree)
    context.add_dims("hopf_hochschild", result["dims"])
    top = min(len(result["dims"]) - 1, ext_d_feasible_degree(data))
    if top >= 0:
        invariant = ext_d_complex(data, top)
        for m in range(top + 1):
            if complex_.hom_space(m).dim != invariant.dimension(m):
                raise RouteMismatch("Hom_Gamma has dim %d in degree %d, invariant cochains %d"
                                    % (complex_.hom_space(m).dim, m, invariant.dimension(m)))
    return oracle_outcome("Hopf-Hochschild", result["dims"], context.bg_dims, context.oracle_degree)


ROUTES: Dict[CheckName, Callable[[JobContext], str]] = {
    CheckName.BG: run_bg,
    CheckName.EXT_D: run_ext_d,
    CheckName.BAR: run_bar,
    CheckName.ADJOINT: run_adjoint,
    CheckName.RING: run_ring,
    CheckName.CHAINMAPS: run_chainmaps,
    CheckName.GAMMA: run_gamma,
    CheckName.HOPF_HOCHSCHILD: run_hopf_hochschild,
}


def route_for(name: CheckName) -> Optional[Callable[[JobContext], str]]:
    return ROUTES.get(name)
