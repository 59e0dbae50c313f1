from cclosed.bench import ALGOS, BenchRow, rows_to_tsv, run_bench, scaling_violations


def row(steps, bound):
    return BenchRow("x", 1, 1, 1, 1, 0, steps, 0.0, bound)


def test_scaling_violations_flags_fast_growth():
    assert scaling_violations([row(100, 10), row(200, 20)]) == []
    assert scaling_violations([row(100, 10), row(790, 20)]) == []
    bad = scaling_violations([row(100, 10), row(900, 20)])
    assert len(bad) == 1 and bad[0][2] == 9.0


def test_run_bench_rows():
    rows = run_bench("star", [8, 16], "p3")
    assert [r.count for r in rows] == [28, 120]
    assert all(r.c == 2 and r.steps > 0 and r.bound > 0 for r in rows)
    text = rows_to_tsv(rows)
    assert text.count("\n") == 3


def test_every_algorithm_runs():
    for algo in ALGOS:
        rows = run_bench("gnp", [12, 24], algo, density=0.3, seed=2)
        assert len(rows) == 2 and rows[1].n == 24
