"""Acceptance criteria; each test prints one ``ACCEPT <n> PASS|FAIL`` line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import random
import time

import numpy as np
import pytest
from conftest import seeded_graphs

from superwalk import counting, io
from superwalk.cli import run
from superwalk.counting import edge_super_walk_matrix, verify, walk_count_matrix
from superwalk.exact import IntMatrix, identity, mat_mul, mat_pow
from superwalk.families import complete_graph
from superwalk.graph import even_laplacian, flip_edge, odd_laplacian
from superwalk.oracle import edge_super_steps, enumerate_walks, signed_edge_super_walks, signed_super_walks
from superwalk.spectral import evolve_state, matrix_exponential, supertrace


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPT {number} {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail

    return emit


def test_1_super_walk_golden(fig1, report):
    start = time.perf_counter()
    matrix_value = mat_pow(even_laplacian(fig1), 2)[0, 1]
    walks, oracle_value = signed_super_walks(fig1, "v1", "v2", 2)
    signs = sorted(w.sign for w in walks)
    elapsed = time.perf_counter() - start
    ok = matrix_value == oracle_value == -3 and signs == [-1, -1, -1, -1, 1] and elapsed < 1
    report(1, ok, f"(L+)^2(v1,v2)={matrix_value}, oracle={oracle_value}, signs={signs}, {elapsed:.3f}s")


def test_2_edge_super_walk_golden(fig2, report):
    start = time.perf_counter()
    lap = odd_laplacian(fig2)
    matrix_value = mat_pow(lap, 2)[0, 1]
    walks, oracle_value = signed_edge_super_walks(fig2, "e1", "e2", 2)
    signs = sorted((w.sign for w in walks), reverse=True)
    diagonal = [lap[i, i] for i in range(7)]
    elapsed = time.perf_counter() - start
    ok = (
        matrix_value == oracle_value == 3
        and signs == [1, 1, 1, 1, -1]
        and diagonal == [2] * 7
        and elapsed < 1
    )
    report(2, ok, f"(L-)^2(e1,e2)={matrix_value}, oracle={oracle_value}, signs={signs}, diag={diagonal}, {elapsed:.3f}s")


def test_3_walk_golden(fig1, report):
    start = time.perf_counter()
    matrix_value = walk_count_matrix(fig1, 5)[0, 5]
    walks = [w.describe(fig1) for w in enumerate_walks(fig1, "v1", "v6", 5)]
    listed = [
        "v1 -e1-> v2 -e3-> v4 -e4-> v5 -e7-> v3 -e6-> v6",
        "v1 -e2-> v4 -e4-> v5 -e5-> v6 -e6-> v3 -e6-> v6",
    ]
    elapsed = time.perf_counter() - start
    ok = matrix_value == len(walks) and all(w in walks for w in listed) and elapsed < 1
    report(3, ok, f"A^5(v1,v6)={matrix_value}, oracle={len(walks)}, listed walks present, {elapsed:.3f}s")


def test_4_exhaustive_verification(golden, report):
    graphs = list(golden.values()) + seeded_graphs(200)
    start = time.perf_counter()
    failures = [g.summary() for g in graphs if not verify(g, 4).passed]
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60 and max(g.n_vertices for g in graphs) <= 7
    report(4, ok, f"{len(graphs)} graphs, K=4, failures={failures}, {elapsed:.1f}s")


def test_5_orientation_laws(fig2, report):
    graphs = [fig2] + seeded_graphs(20, seed0=5000)
    bad = 0
    checks = 0
    for g in graphs:
        powers = [edge_super_walk_matrix(g, k) for k in range(5)]
        for e in g.edges:
            h = flip_edge(g, e)
            checks += 1
            if even_laplacian(h) != even_laplacian(g):
                bad += 1
            d = [-1 if j == e.index else 1 for j in range(g.n_edges)]
            for k in range(5):
                conj = IntMatrix.from_rows(
                    ([d[i] * x * d[j] for j, x in enumerate(row)] for i, row in enumerate(powers[k].entries)),
                    g.n_edges,
                )
                if edge_super_walk_matrix(h, k) != conj:
                    bad += 1
    report(5, bad == 0, f"{len(graphs)} graphs, {checks} single-edge flips, violations={bad}")


def test_6_matrix_engine(report):
    rng = random.Random(6)
    mismatches = 0
    cases = 0
    for _ in range(150):
        n = rng.randint(1, 6)
        m = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        naive = identity(n)
        for k in range(9):
            cases += 1
            if mat_pow(m, k) != naive:
                mismatches += 1
            naive = mat_mul(naive, m)
    big = mat_pow(even_laplacian(complete_graph(4)), 40)
    largest = max(abs(x) for row in big.entries for x in row)
    round_trip = all(io.read_matrix(io.write_matrix(big, fmt), fmt) == big for fmt in ("csv", "json"))
    ok = mismatches == 0 and largest > 2**64 and round_trip
    report(6, ok, f"{cases} power cases, mismatches={mismatches}; K4 (L+)^40 max entry 2^{largest.bit_length() - 1}+, round-trip={round_trip}")


def test_7_spectral_identities(golden, report):
    worst_supertrace = 0.0
    for g in golden.values():
        for t in (0, 0.1, 0.25, 0.5, 1, 2):
            worst_supertrace = max(worst_supertrace, abs(supertrace(g, t, 1e-12) - (g.n_vertices - g.n_edges)))

    rng = np.random.default_rng(7)
    worst_semigroup = 0.0
    worst_derivative = 0.0
    h = 1e-5
    for g in golden.values():
        psi = rng.normal(size=g.n_vertices + g.n_edges)
        for t, s in ((0.1, 0.4), (0.5, 1.0), (1.0, 1.0)):
            two = evolve_state(g, evolve_state(g, psi, t, 1e-12), s, 1e-12)
            one = evolve_state(g, psi, t + s, 1e-12)
            worst_semigroup = max(worst_semigroup, float(np.abs(two - one).max()))
        for lap in (even_laplacian(g), odd_laplacian(g)):
            dense = np.array(lap.tolist(), dtype=float)
            for t in (0.5, 1.0):
                k0 = matrix_exponential(lap, t, 1e-14).matrix
                k1 = matrix_exponential(lap, t + h, 1e-14).matrix
                worst_derivative = max(worst_derivative, float(np.abs((k1 - k0) / h + dense @ k0).max()))
    ok = worst_supertrace <= 1e-9 and worst_semigroup <= 1e-10 and worst_derivative <= 1e-4
    report(
        7,
        ok,
        f"supertrace err={worst_supertrace:.2e} (<=1e-9), semigroup err={worst_semigroup:.2e} (<=1e-10), "
        f"derivative err={worst_derivative:.2e} (<=1e-4)",
    )


def test_8_erratum_regression(fig2, report):
    # e1 and e2 both start at v1, so the same-sign rule makes this step +1.
    # Calling it negative would break the length-1 identity with L-(e1,e2)
    # and flip the first four length-2 walks, giving -5 instead of 3.
    step = next(s for s in edge_super_steps(fig2, "e1") if s.destination == 1)
    _, total = signed_edge_super_walks(fig2, "e1", "e2", 2)
    length_one = signed_edge_super_walks(fig2, "e1", "e2", 1)[1]
    ok = (
        step.via_vertex == 0
        and step.sign == 1
        and length_one == odd_laplacian(fig2)[0, 1] == 1
        and total == 3
    )
    report(8, ok, f"e1 -v1-> e2 sign={step.sign:+d}, length-1 sum={length_one}, length-2 sum={total}")


def test_9_cli_contract(capsys, monkeypatch, report):
    invocations = [
        ["count", "super", "--graph", "fig1", "--from", "v1", "--to", "v2", "--length", "2", "--method", "both"],
        ["count", "edge-super", "--graph", "fig2", "--from", "e1", "--to", "e2", "--length", "2", "--method", "both"],
        ["count", "walks", "--graph", "fig1", "--from", "v1", "--to", "v4", "--length", "1", "--method", "both"],
    ]
    results = []
    for argv in invocations:
        code = run(argv)
        out = capsys.readouterr().out.strip()
        matrix, oracle = (part.split(": ")[1] for part in out.split(", "))
        results.append((code, matrix, oracle))
    clean = run(["verify", "--graph", "fig2", "--max-length", "3"])
    capsys.readouterr()

    def corrupted(g):
        m = odd_laplacian(g).tolist()
        m[0][0] += 1
        return IntMatrix.from_rows(m)

    monkeypatch.setattr(counting, "odd_laplacian", corrupted)
    falsified = run(["verify", "--graph", "fig2", "--max-length", "3"])
    capsys.readouterr()
    ok = (
        results == [(0, "-3", "-3"), (0, "3", "3"), (0, "1", "1")]
        and clean == 0
        and falsified == 4
    )
    report(9, ok, f"count --method both -> {results}; verify clean={clean}, corrupted L-={falsified}")
