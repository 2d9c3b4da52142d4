"""Verification campaigns over cluster monomials.

Each campaign returns a :class:`CampaignReport`: a sorted list of one-line
text records, an ordered summary and the wall-clock timings.  ``render()``
leaves the timings out, so the rendered text depends only on the config
and is identical for any worker count.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from .cluster import (
    ExchangeGraph,
    ExchangeMatrix,
    Permutation,
    Seed,
    enumerate_exchange_graph,
    list_cluster_variables,
    read_seed_file,
)
from .errors import DomainError
from .laurent import LaurentPolynomial, coefficient_array, normalize, parse
from .reference import (
    CASE_MATRICES,
    PRODUCT_FACTORS,
    PRODUCT_WITNESS,
    REFERENCE_CLUSTERS,
    SMALL_RANK_MATRICES,
)
from .seqprops import has_internal_zeros, is_log_concave, is_unimodal

__all__ = [
    "CampaignConfig",
    "CampaignReport",
    "MonomialResult",
    "case_seed",
    "match_reference_table",
    "check_laurent",
    "verify_tables",
    "verify_theorem",
    "reproduce_counterexample",
    "verify_small_rank",
    "scan_conjecture",
    "export_graph",
    "verify_reduction",
]

UNIMODALITY_READINGS = ("uniform", "fiberwise")


@dataclass(frozen=True)
class CampaignConfig:
    """``case`` is a reduced-case name, ``A1``/``A2``, or a seed file path."""

    case: str = "inward"
    max_exponent: int = 4
    node_limit: int = 10_000
    workers: int = 1
    unimodality: str = "uniform"
    output: Optional[Path] = None

    def __post_init__(self):
        if self.max_exponent < 0:
            raise DomainError("max_exponent must be nonnegative")
        if self.node_limit < 1:
            raise DomainError("node_limit must be at least 1")
        if self.workers < 1:
            raise DomainError("workers must be at least 1")
        if self.unimodality not in UNIMODALITY_READINGS:
            raise DomainError(f"unimodality must be one of {UNIMODALITY_READINGS}")


@dataclass
class CampaignReport:
    title: str
    passed: bool
    records: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    label: str = ""

    def render(self, timings: bool = False) -> str:
        lines = [f"campaign: {self.title}"]
        if self.label:
            lines.append(f"label: {self.label}")
        lines += self.records
        lines.append("summary:")
        lines += [f"  {k}: {v}" for k, v in self.summary.items()]
        if timings:
            lines += [f"  time_{k}: {v:.3f}s" for k, v in self.timings.items()]
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"

    def write(self, path) -> None:
        Path(path).write_text(self.render())


# -- seeds and table matching --------------------------------------------------


def case_seed(case: str) -> Seed:
    """Initial seed for a reduced-case name, ``A1``/``A2``, or a seed file."""
    if case in CASE_MATRICES:
        return Seed.initial(ExchangeMatrix(CASE_MATRICES[case]))
    if case in SMALL_RANK_MATRICES:
        return Seed.initial(ExchangeMatrix(SMALL_RANK_MATRICES[case]))
    path = Path(case)
    if path.is_file():
        return read_seed_file(path)[0]
    known = ", ".join(list(CASE_MATRICES) + list(SMALL_RANK_MATRICES))
    raise DomainError(f"unknown case {case!r}; expected one of {known} or a seed file")


def _reference_rows(case: str) -> list[tuple]:
    return [tuple(parse(t, rank=3) for t in row) for row in REFERENCE_CLUSTERS[case]]


def _multiset(cluster) -> tuple:
    return tuple(sorted(x.to_text() for x in cluster))


def match_reference_table(case: str, graph: Optional[ExchangeGraph] = None):
    """Pair reference rows with enumerated clusters.

    Returns ``(graph, matches, unmatched_rows, unmatched_nodes)`` where
    ``matches`` maps row number to ``(node, cluster)`` and the cluster is
    the enumerated one, reordered to follow the row's entry order.
    """
    if case not in REFERENCE_CLUSTERS:
        raise DomainError(f"no reference table for case {case!r}")
    if graph is None:
        graph = enumerate_exchange_graph(case_seed(case))
    by_multiset = {}
    for u, s in enumerate(graph.seeds):
        by_multiset.setdefault(_multiset(s.cluster), []).append(u)
    matches, unmatched_rows = {}, []
    used = set()
    for row_no, row in enumerate(_reference_rows(case), start=1):
        nodes = [u for u in by_multiset.get(_multiset(row), []) if u not in used]
        if not nodes:
            unmatched_rows.append(row_no)
            continue
        u = nodes[0]
        used.add(u)
        pool = list(graph.seeds[u].cluster)
        ordered = []
        for entry in row:
            ordered.append(pool.pop(pool.index(entry)))
        matches[row_no] = (u, tuple(ordered))
    unmatched_nodes = [u for u in range(len(graph)) if u not in used]
    return graph, matches, unmatched_rows, unmatched_nodes


def verify_tables(case: str) -> CampaignReport:
    """Enumerate a reduced case and compare with its reference table."""
    t0 = time.perf_counter()
    graph, matches, missing_rows, extra_nodes = match_reference_table(case)
    variables = list_cluster_variables(graph)
    ref_vars = {x for row in _reference_rows(case) for x in row}
    records = []
    for row_no in range(1, len(REFERENCE_CLUSTERS[case]) + 1):
        if row_no in matches:
            u, cluster = matches[row_no]
            texts = ", ".join(normalize(x).to_text() for x in cluster)
            records.append(f"row={row_no} verdict=matched node={u + 1} cluster=({texts})")
        else:
            texts = ", ".join(REFERENCE_CLUSTERS[case][row_no - 1])
            records.append(f"row={row_no} verdict=unmatched expected=({texts})")
    for u in extra_nodes:
        texts = ", ".join(graph.seeds[u].cluster_text())
        records.append(f"node={u + 1} verdict=unlisted cluster=({texts})")
    passed = (len(graph) == 14 and not missing_rows and not extra_nodes
              and len(variables) == 9 and set(variables) == ref_vars)
    summary = {
        "case": case,
        "clusters": len(graph),
        "rows_matched": f"{len(matches)}/{len(REFERENCE_CLUSTERS[case])}",
        "edges": len(graph.edges),
        "cluster_variables": len(variables),
        "variables_agree": set(variables) == ref_vars,
    }
    return CampaignReport(f"verify-tables {case}", passed, records, summary,
                          {"total": time.perf_counter() - t0})


# -- monomial checks -----------------------------------------------------------


@dataclass(frozen=True)
class MonomialResult:
    cluster_id: int
    exponents: tuple
    reports: tuple  # log_concave, no_internal_zeros, unimodal_uniform, unimodal_fiberwise

    def passed(self, unimodality: str = "uniform") -> bool:
        lc, nz, uu, uf = self.reports
        return lc.passed and nz.passed and (uu if unimodality == "uniform" else uf).passed

    def to_records(self) -> list[str]:
        exps = ",".join(str(e) for e in self.exponents)
        head = f"cluster={self.cluster_id} exponents=({exps})"
        verdicts = " ".join(f"{r.name}={r.verdict}" for r in self.reports)
        lines = [f"{head} {verdicts}"]
        for r in self.reports:
            if not r.passed:
                lines.append(f"{head} witness {r.to_record()}")
        return lines


def check_laurent(p: LaurentPolynomial) -> tuple:
    """All four checks on the numerator of ``p``'s normal form."""
    arr = coefficient_array(normalize(p).numerator)
    return (is_log_concave(arr), has_internal_zeros(arr),
            is_unimodal(arr, uniform=True), is_unimodal(arr, uniform=False))


def _check_cluster(job) -> list[MonomialResult]:
    cluster_id, cluster, max_exponent = job
    powers = [[x ** m for m in range(max_exponent + 1)] for x in cluster]
    out = []
    for exps in itertools.product(range(max_exponent + 1), repeat=len(cluster)):
        mono = LaurentPolynomial.one(len(cluster))
        for row, m in zip(powers, exps):
            if m:
                mono = mono * row[m]
        out.append(MonomialResult(cluster_id, exps, check_laurent(mono)))
    return out


def _run_monomials(clusters: Sequence[tuple], max_exponent: int, workers: int):
    jobs = [(cid, tuple(c), max_exponent) for cid, c in clusters]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_check_cluster, jobs))
    else:
        chunks = [_check_cluster(j) for j in jobs]
    results = [r for chunk in chunks for r in chunk]
    results.sort(key=lambda r: (r.cluster_id, r.exponents))
    return results


def _monomial_report(title, results, unimodality, extra_summary, timings, label=""):
    records = [line for r in results for line in r.to_records()]
    names = ("log_concave", "no_internal_zeros", "unimodal_uniform", "unimodal_fiberwise")
    fails = {n: sum(1 for r in results if not r.reports[i].passed) for i, n in enumerate(names)}
    failing = [r for r in results if not r.passed(unimodality)]
    summary = dict(extra_summary)
    summary["unimodality_reading"] = unimodality
    summary["monomials"] = len(results)
    for n in names:
        summary[f"{n}_failures"] = fails[n]
    summary["failing_monomials"] = len(failing)
    if failing:
        first = failing[0]
        summary["first_failure"] = (f"cluster={first.cluster_id} exponents="
                                    f"({','.join(map(str, first.exponents))})")
    return CampaignReport(title, not failing, records, summary, timings, label)


def verify_theorem(case: str, max_exponent: int = 4, workers: int = 1,
                   unimodality: str = "uniform") -> CampaignReport:
    """Check every cluster monomial of a reduced A3 case up to the bound.

    Cluster ids are reference-table row numbers; exponent vectors follow
    each row's entry order.
    """
    cfg = CampaignConfig(case, max_exponent, workers=workers, unimodality=unimodality)
    t0 = time.perf_counter()
    graph, matches, missing, extra = match_reference_table(case)
    if missing or extra:
        raise DomainError(f"case {case!r} does not match its reference table")
    t1 = time.perf_counter()
    clusters = [(row, cluster) for row, (_, cluster) in sorted(matches.items())]
    results = _run_monomials(clusters, cfg.max_exponent, cfg.workers)
    t2 = time.perf_counter()
    summary = {"case": case, "clusters": len(clusters), "max_exponent": max_exponent}
    return _monomial_report(f"verify-theorem {case}", results, unimodality, summary,
                            {"enumerate": t1 - t0, "check": t2 - t1})


def scan_conjecture(seed: Union[Seed, str], max_exponent: int = 2, node_limit: int = 10_000,
                    workers: int = 1, unimodality: str = "uniform") -> CampaignReport:
    """Enumerate from ``seed`` and check all cluster monomials up to the bound.

    A clean scan is evidence for the tested seed and bound only.
    Cluster ids are breadth-first node numbers starting at 1.
    """
    cfg = CampaignConfig(str(seed) if isinstance(seed, str) else "custom",
                         max_exponent, node_limit, workers, unimodality)
    if isinstance(seed, str):
        seed = case_seed(seed)
    t0 = time.perf_counter()
    graph = enumerate_exchange_graph(seed, node_limit=cfg.node_limit)
    t1 = time.perf_counter()
    clusters = [(u + 1, s.cluster) for u, s in enumerate(graph.seeds)]
    results = _run_monomials(clusters, cfg.max_exponent, cfg.workers)
    t2 = time.perf_counter()
    summary = {"rank": seed.rank, "clusters": len(graph), "edges": len(graph.edges),
               "cluster_variables": len(list_cluster_variables(graph)),
               "max_exponent": max_exponent}
    return _monomial_report("scan-conjecture", results, unimodality, summary,
                            {"enumerate": t1 - t0, "check": t2 - t1},
                            label="EVIDENCE, not proof: covers this seed and bound only")


def verify_small_rank(selector: str, max_exponent: int = 6,
                      unimodality: str = "uniform") -> CampaignReport:
    """``A1``: both variables.  ``A2``: all monomials up to the bound.
    ``A3``: the 9 cluster variables of each reduced case."""
    t0 = time.perf_counter()
    if selector == "A2":
        graph = enumerate_exchange_graph(case_seed("A2"))
        clusters = [(u + 1, s.cluster) for u, s in enumerate(graph.seeds)]
        results = _run_monomials(clusters, max_exponent, 1)
        summary = {"type": "A2", "clusters": len(graph), "max_exponent": max_exponent}
    elif selector in ("A1", "A3"):
        cases = ["A1"] if selector == "A1" else list(CASE_MATRICES)
        results = []
        summary = {"type": selector}
        for ci, case in enumerate(cases, start=1):
            variables = sorted(list_cluster_variables(enumerate_exchange_graph(case_seed(case))),
                               key=lambda x: x.to_text())
            summary[f"variables_{case}"] = len(variables)
            for vi, x in enumerate(variables, start=1):
                # cluster id = case number, exponent slot = variable number
                results.append(MonomialResult(ci, (vi,), check_laurent(x)))
    else:
        raise DomainError("selector must be A1, A2 or A3")
    return _monomial_report(f"verify-small-rank {selector}", results, unimodality, summary,
                            {"total": time.perf_counter() - t0})


# -- single-shot campaigns -----------------------------------------------------


def reproduce_counterexample() -> CampaignReport:
    """Two log-concave factors whose product fails log-concavity."""
    f, g = (parse(t, rank=2) for t in PRODUCT_FACTORS)
    records = []
    reports = []
    for name, p in (("f", f), ("g", g), ("f*g", f * g)):
        nf = normalize(p)
        rep = is_log_concave(coefficient_array(nf.numerator))
        reports.append(rep)
        records.append(f"poly={name} numerator={nf.numerator.to_text()} {rep.to_record()}")
    rf, rg, rfg = reports
    w = rfg.witness
    matches = (w is not None and tuple(w.values) == PRODUCT_WITNESS
               and w.axis == 1 and w.index[0] == 3)
    summary = {"factors_log_concave": rf.passed and rg.passed,
               "product_log_concave": rfg.passed}
    if w is not None:
        left, mid, right = w.values
        summary["witness"] = f"{tuple(w.values)} along x{w.axis + 1} at cell {w.index}"
        summary["inequality"] = f"{mid * mid} < {left * right}"
    passed = rf.passed and rg.passed and not rfg.passed and matches
    return CampaignReport("counterexample", passed, records, summary)


def export_graph(case: Union[str, Seed], path=None, format: str = "dot",
                 node_limit: int = 10_000) -> str:
    """DOT text of the exchange graph; also written to ``path`` if given."""
    if format != "dot":
        raise DomainError("only the dot format is supported")
    seed = case_seed(case) if isinstance(case, str) else case
    text = enumerate_exchange_graph(seed, node_limit=node_limit).to_dot()
    if path is not None:
        Path(path).write_text(text)
    return text


def _rename(p: LaurentPolynomial, sigma: Permutation) -> LaurentPolynomial:
    """Substitute ``x_i -> x_sigma(i)``."""
    terms = {}
    for exp, c in p.terms.items():
        new = [0] * p.rank
        for i, e in enumerate(exp):
            new[sigma(i)] = e
        terms[tuple(new)] = c
    return LaurentPolynomial(p.rank, terms)


def verify_reduction() -> CampaignReport:
    """Check the reductions that leave three rank-3 cases.

    A matrix and its negative give the same cluster variables, and
    relabeling the quiver's vertices renames the variables accordingly.
    """
    records = []
    ok = True
    for case, rows in CASE_MATRICES.items():
        B = ExchangeMatrix(rows)
        base = list_cluster_variables(enumerate_exchange_graph(Seed.initial(B)))
        neg = list_cluster_variables(enumerate_exchange_graph(Seed.initial(-B)))
        same = base == neg
        ok &= same
        records.append(f"case={case} check=negated_matrix verdict={'pass' if same else 'fail'}")
        for images in itertools.permutations(range(3)):
            sigma = Permutation(images)
            # vertex i of B becomes vertex sigma(i)
            inv = sigma.inverse()
            rows_p = [[B[inv(i), inv(j)] for j in range(3)] for i in range(3)]
            got = list_cluster_variables(enumerate_exchange_graph(Seed.initial(rows_p)))
            want = frozenset(_rename(x, sigma) for x in base)
            same = got == want
            ok &= same
            label = "".join(str(i + 1) for i in images)
            records.append(f"case={case} check=relabel sigma={label} "
                           f"verdict={'pass' if same else 'fail'}")
    summary = {"checks": len(records), "failures": sum("verdict=fail" in r for r in records)}
    return CampaignReport("verify-reduction", ok, records, summary)
