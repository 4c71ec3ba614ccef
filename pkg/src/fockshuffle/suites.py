"""Named verification suites and the runner behind the command line."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

from . import fockrep, shufflealg, symfun, theta
from .exact.field import make_field
from .report import Check, Report

SUITES = ("relations", "shuffle", "macdonald", "theta")


@dataclass(frozen=True)
class Config:
    max_size: int = 5
    series_order: int = 8
    mode: str = "exact"
    seed: int = 0
    jobs: int = 1

    def validate(self):
        if self.max_size < 1:
            raise ValueError("max-size must be positive")
        if self.series_order < 1:
            raise ValueError("series-order must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        if self.mode not in ("exact", "sampled"):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def field(self):
        return make_field(self.mode, self.seed)

    def params(self) -> dict:
        out = {"max_size": self.max_size, "series_order": self.series_order, "mode": self.mode}
        if self.mode == "sampled":
            out["seed"] = self.seed
        return out


def _cubic(fld) -> Check:
    a, b = fockrep.cubic_annihilation(fld)
    ok = a and b
    return Check(
        "cubic-roots",
        "1 - s1 u + s2 u^2 - s3 u^3 vanishes at u = 1/t1 and u = 1/t2",
        ok,
        None if ok else {"at_1/t1": a, "at_1/t2": b},
        2,
    )


def _relation3_and_heis(nmax, fld):
    return fockrep.verify_relation(3, nmax=nmax, fld=fld) + [fockrep.verify_character_eigenvalue(nmax, fld)]


def relations_tasks(cfg: Config, fld) -> list:
    n, k = cfg.max_size, cfg.series_order
    return [
        partial(fockrep.verify_coefficient_oracles, n, fld=fld),
        partial(fockrep.verify_relation, 1, nmax=n, fld=fld),
        partial(fockrep.verify_relation, 2, nmax=n, fld=fld),
        partial(_relation3_and_heis, n, fld),
        partial(fockrep.verify_gamma, n, fld=fld),
        partial(fockrep.verify_psi_ratio, n, k, fld=fld),
        partial(fockrep.verify_relation, 4, nmax=n, order=k, fld=fld),
        partial(fockrep.verify_relation, 5, nmax=n, order=k, fld=fld),
        partial(_cubic, fld),
    ]


_GENERATORS = {"x^-1": (-1, None), "x^0": (0, None), "x^1": (1, None), "K2": (None, 2)}


def _element(name: str):
    r, k = _GENERATORS[name]
    return shufflealg.generator(r) if k is None else shufflealg.k_element(k)


def _homomorphisms(nmax, fld) -> list[Check]:
    out = []
    for a in _GENERATORS:
        for b in _GENERATORS:
            out.append(shufflealg.verify_homomorphism(_element(a), _element(b), nmax, fld, label=f"{a} o {b}"))
    return out


def _order_independence(nmax, fld) -> list[Check]:
    out = [shufflealg.verify_order_independence(_element(a), nmax, fld, label=a) for a in _GENERATORS]
    if nmax >= 3:
        out.append(shufflealg.verify_order_independence(shufflealg.k_element(3), nmax, fld, label="K3"))
    return out


def _pole_limits(nmax, fld) -> list[Check]:
    out = []
    if nmax >= 4:
        out.append(shufflealg.verify_limit_weights(shufflealg.k_element(4), nmax, fld, label="K4"))
        K2 = shufflealg.k_element(2)
        out.append(shufflealg.verify_limit_weights(shufflealg.star_product(K2, K2), nmax, fld, label="K2*K2"))
    return out


def shuffle_tasks(cfg: Config, fld) -> list:
    n = cfg.max_size
    tasks = [
        partial(shufflealg.verify_generator_action, nmax=n, fld=fld),
        partial(_homomorphisms, n, fld),
        partial(_order_independence, n, fld),
        partial(_pole_limits, n, fld),
        partial(shufflealg.verify_associativity),
        partial(shufflealg.verify_wheel),
        partial(shufflealg.verify_vanishing_mechanism, n),
    ]
    cap = min(n, shufflealg.DEFAULT_ARITY_CAP)
    for total in range(2, cap + 1):
        for m in range(1, total // 2 + 1):
            tasks.append(partial(shufflealg.verify_k_commute, m, total - m, n, fld))
    return tasks


def macdonald_tasks(cfg: Config, fld) -> list:
    n = cfg.max_size
    qt = fld.qt_field()
    return [
        partial(symfun.verify_conversions, 8),
        partial(symfun.verify_newton, 8),
        partial(symfun.verify_orthogonality, n, qt),
        partial(symfun.verify_tiebreak, n, qt),
        partial(symfun.verify_pieri, n, qt),
        partial(symfun.verify_pieri_single, n, qt),
    ]


def theta_tasks(cfg: Config, fld) -> list:
    n = cfg.max_size
    tasks = [
        partial(theta.verify_c_ratio, n, fld),
        partial(theta.verify_single_box_edges, n, fld),
    ]
    tasks += [partial(theta.verify_theta, k, n, fld) for k in (1, 2, 3) if k <= n]
    tasks += [
        partial(theta.verify_heisenberg_commute, 3, n, fld),
        partial(theta.verify_intertwining, 3, n, fld),
    ]
    return tasks


_BUILDERS = {
    "relations": relations_tasks,
    "shuffle": shuffle_tasks,
    "macdonald": macdonald_tasks,
    "theta": theta_tasks,
}


def _run_task(task) -> list[Check]:
    start = time.perf_counter()
    res = task()
    checks = res if isinstance(res, list) else [res]
    elapsed = time.perf_counter() - start
    for c in checks:
        c.seconds = elapsed
    return checks


def run_suite(name: str, config: Config | None = None) -> Report:
    """Run one suite (or ``all``) and collect the checks in a fixed order."""
    cfg = config or Config()
    cfg.validate()
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES + ('all',))}")
    fld = cfg.field
    tasks = [t for n in names for t in _BUILDERS[n](cfg, fld)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    checks = [c for group in results for c in group]
    return Report(name, cfg.params(), checks)
