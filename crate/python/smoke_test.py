#!/usr/bin/env python3
"""End-to-end smoke test for the croissant Python module.

Builds nothing itself: run `cargo build -p croissant-python` first, then
`python3 python/smoke_test.py`. The script links the produced cdylib into a
temporary directory under the import name `croissant` and drives one pass
through graphs, spectra, the plane, sweeps, and epoch ingestion.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def import_module():
    candidates = [
        REPO / "target" / "debug" / "libcroissant.so",
        REPO / "target" / "release" / "libcroissant.so",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "libcroissant.so not found; run `cargo build -p croissant-python` first"
        )
    stage = Path(tempfile.mkdtemp(prefix="croissant_py_"))
    shutil.copy2(built, stage / "croissant.so")
    sys.path.insert(0, str(stage))
    import croissant

    return croissant


def close(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def main():
    croissant = import_module()
    print(f"imported croissant {croissant.__version__}")

    # Graphs and spectra: a star has one hub of full degree, and the
    # eigenvalues of any graph sum to -2m.
    star = croissant.multi_star(12, 1)
    assert star.node_count == 12 and star.edge_count == 11
    assert sorted(star.degrees())[-1] == 11
    s = star.spectrum()
    assert close(sum(s.eigenvalues), -2.0 * star.edge_count)
    assert min(s.eigenvalues) < 0.0 <= max(s.eigenvalues)
    print(f"star spectrum ok: complexity {s.complexity:.6f}")

    # Complement invariance of the complexity measure.
    g = croissant.erdos_renyi(30, 0.4, seed=7)
    c = g.spectrum().complexity
    cc = g.complement().spectrum().complexity
    assert close(c, cc, 1e-9), (c, cc)
    assert close(g.link_density() + g.complement().link_density(), 1.0)
    print(f"complement invariance ok: {c:.6f} == {cc:.6f}")

    # Edge-list text round trip.
    again = croissant.Graph.parse_edge_list(g.to_edge_list())
    assert again.edges() == g.edges()

    # The plane: points sit between the boundaries, extremes at zero.
    p = croissant.locate(g)
    assert 0.0 < p.rho < 1.0 and 0.0 < p.c_norm <= 1.0
    upper = croissant.upper_boundary(30)
    lower = croissant.lower_boundary(30)
    assert upper.kind == "upper" and lower.kind == "lower"
    assert lower.interpolate(p.rho) <= p.c_raw <= upper.interpolate(p.rho) * (1 + 1e-9)
    assert croissant.locate(croissant.Graph(30)).c_raw == 0.0
    assert close(croissant.locate(croissant.Graph.complete(30)).c_raw, 0.0, 1e-7)
    n30 = croissant.normalization_constant(30)
    assert close(max(q.c_raw for q in upper.points), n30)
    print(f"plane ok: rho={p.rho:.4f}, c_norm={p.c_norm:.4f}, N(30)={n30:.3f}")

    # Sweeps: deterministic under the seed, zero variance at the frozen end
    # of the rewiring range.
    grid = [croissant.ModelParams.er(20, p / 4) for p in range(5)]
    grid.append(croissant.ModelParams.ws(20, 3, 0.0))
    grid.append(croissant.ModelParams.ba(20, 5))
    recs1 = croissant.run_sweep(grid, replicates=6, base_seed=42)
    recs2 = croissant.run_sweep(grid, replicates=6, base_seed=42)
    assert [r.stats.c_mean for r in recs1] == [r.stats.c_mean for r in recs2]
    assert recs1[0].stats.c_mean == 0.0  # p = 0: edgeless every time
    ws0 = recs1[5]
    assert ws0.params.model == "ws" and ws0.stats.c_std == 0.0
    lattice = croissant.circulant(20, 3).spectrum().complexity
    assert ws0.stats.c_mean == lattice
    seed0 = croissant.replicate_seed(42, grid[6], 6, 0)
    assert grid[6].generate(seed0).edge_count == 5 * (20 - 5)
    print(f"sweep ok: {len(recs1)} grid points, ws(beta=0) pinned to the lattice")

    # Epoch ingestion: three identical 0/1 matrices behave as one graph.
    text = croissant.multi_star(8, 2).to_edge_list()
    graph8 = croissant.Graph.parse_edge_list(text)
    rows = []
    for i in range(8):
        rows.append(
            " ".join("1" if graph8.has_edge(i, j) else "0" for j in range(8))
        )
    matrix = croissant.ConnectivityMatrix.parse("\n".join(rows))
    assert matrix.dim == 8
    epochs = croissant.EpochSet("sim", [matrix, matrix, matrix])
    summary = croissant.analyze_epochs(epochs, threshold=0.5)
    located = croissant.locate(matrix.binarize(0.5))
    assert summary.epochs == 3 and summary.stats.c_std == 0.0
    assert summary.stats.c_mean == located.c_raw
    print(f"ingest ok: c_norm {summary.stats.c_norm_mean:.4f} across 3 epochs")

    # Errors arrive as Python exceptions with the library's messages.
    try:
        croissant.ConnectivityMatrix.parse("0 2\n2 0")
        raise AssertionError("out-of-range weight must be rejected")
    except ValueError as err:
        assert "weight" in str(err) or "2" in str(err)
    try:
        croissant.erdos_renyi(10, 1.5, seed=1)
        raise AssertionError("probability above 1 must be rejected")
    except ValueError:
        pass
    if not math.isfinite(croissant.normalization_constant(10)):
        raise AssertionError("normalization constant must be finite")
    print("error mapping ok")

    print("smoke test passed")


if __name__ == "__main__":
    main()
