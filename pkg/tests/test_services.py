import math

import numpy as np
import pytest

from models import BenchCell, SolverConfig, SparseVariant, SynthSpec
from repositories import FrameRepo, MatrixRepo, ReportRepo
from services import BenchService, DecompositionService, StackService, SynthService, run_bench
from tests.conftest import moving_block_video

FAST = SolverConfig.tuned(max_iter=40)


def small_grid():
    return [
        BenchCell(spec=SynthSpec(m=20, n=20, rank=1, sparsity=0.1, snr=snr), variant=variant)
        for snr in (3.0, 9.0)
        for variant in (SparseVariant.L2, SparseVariant.L0)
    ]


def test_empty_grid():
    report = run_bench([], trials=3, defaults=FAST, base_seed=1)
    assert len(report) == 0
    assert run_bench(small_grid(), trials=0, defaults=FAST, base_seed=1).records == []


def test_bench_record_layout():
    report = run_bench(small_grid(), trials=2, defaults=FAST, base_seed=5, timing=False)
    assert len(report) == 8
    assert [(r.snr, r.variant, r.trial) for r in report.records[:4]] == [
        (3.0, SparseVariant.L2, 0),
        (3.0, SparseVariant.L2, 1),
        (3.0, SparseVariant.L0, 0),
        (3.0, SparseVariant.L0, 1),
    ]
    for record in report.records:
        assert not record.failed
        assert 1 <= record.iterations <= 40
        assert record.wall_seconds == 0.0
        assert math.isfinite(record.rmse_x) and math.isfinite(record.rmse_s)


def test_bench_is_reproducible():
    first = run_bench(small_grid(), trials=2, defaults=FAST, base_seed=11, timing=False)
    second = run_bench(small_grid(), trials=2, defaults=FAST, base_seed=11, timing=False)
    assert first == second


def test_bench_cells_do_not_depend_on_grid_order():
    grid = small_grid()
    forward = run_bench(grid, trials=1, defaults=FAST, base_seed=2, timing=False)
    backward = run_bench(grid[::-1], trials=1, defaults=FAST, base_seed=2, timing=False)
    assert forward.records == backward.records[::-1]


def test_bench_worker_count_does_not_change_results():
    grid = small_grid()[:2]
    serial = run_bench(grid, trials=2, defaults=FAST, base_seed=3, timing=False)
    parallel = run_bench(grid, trials=2, defaults=FAST, base_seed=3, workers=2, timing=False)
    assert serial == parallel


def test_bench_records_failures():
    grid = [
        BenchCell(spec=SynthSpec(m=5, n=5, rank=10, sparsity=0.1, snr=9.0)),
        BenchCell(spec=SynthSpec(m=20, n=20, rank=1, sparsity=0.1, snr=9.0)),
    ]
    report = run_bench(grid, trials=1, defaults=FAST, base_seed=0)
    failed, ok = report.records
    assert failed.error.startswith("ParameterError")
    assert math.isnan(failed.rmse_x) and math.isnan(failed.rmse_s)
    assert failed.iterations == 0
    assert not ok.failed


def test_summarize_and_format():
    grid = [
        BenchCell(spec=SynthSpec(m=5, n=5, rank=10, sparsity=0.1, snr=9.0)),
        BenchCell(spec=SynthSpec(m=20, n=20, rank=1, sparsity=0.1, snr=9.0)),
    ]
    report = run_bench(grid, trials=2, defaults=FAST, base_seed=0, timing=False)
    rows = BenchService.summarize(report)
    assert [(row.m, row.trials, row.failures) for row in rows] == [(5, 2, 2), (20, 2, 0)]
    assert math.isnan(rows[0].mean_rmse_x)
    expected = np.mean([r.rmse_x for r in report.records[2:]])
    assert rows[1].mean_rmse_x == pytest.approx(expected)

    table = BenchService.format_summary(rows).splitlines()
    assert len(table) == 3
    assert table[0].split() == [
        "m", "n", "sparsity", "snr", "variant", "trials", "failed", "rmse_x", "rmse_s", "iters", "seconds",
    ]
    assert len({len(line) for line in table}) == 1


def test_bench_service_save(tmp_path):
    report = BenchService().run(small_grid()[:1], trials=1, defaults=FAST, base_seed=0, timing=False)
    path = BenchService().save(report, tmp_path / "out" / "report.json")
    assert path == tmp_path / "out" / "report.json"
    assert ReportRepo.for_path(path).read(path) == report


def test_synth_service_save(tmp_path):
    service = SynthService(MatrixRepo(tmp_path))
    instance = service.generate(SynthSpec(m=12, n=10, rank=2, sparsity=0.2, snr=6.0, seed=9))
    written = service.save(instance, "fig")
    assert sorted(p.name for p in written.values()) == ["fig_S.csv", "fig_X.csv", "fig_Y.csv"]
    assert np.array_equal(MatrixRepo(tmp_path).find_by_name("fig_Y"), instance.y)


def test_decomposition_service_save(tmp_path, lowrank_matrix):
    service = DecompositionService(MatrixRepo(tmp_path, fmt="mat1"), ReportRepo(tmp_path))
    path = MatrixRepo(tmp_path, fmt="mat1").create("input", lowrank_matrix)
    y = service.load(path)
    result, taken = service.decompose(y, SolverConfig(rank=2, max_iter=12), snapshots=[1, 10, 100])
    assert sorted(taken) == [1, 10]

    written = service.save(result, "run", trace=True, snapshots=taken)
    assert sorted(written) == ["S", "W", "W_iter1", "W_iter10", "X", "trace"]
    assert written["trace"].name == "run_trace.csv"
    assert len(written["trace"].read_text().splitlines()) == result.iterations + 1
    assert np.array_equal(service.repo.find_by_name("run_X"), result.low_rank)

    ru, rv = service.residuals(y, result)
    assert ru >= 0.0 and rv >= 0.0


def test_stack_service(tmp_path):
    stack, _, _ = moving_block_video(frames=8, size=12, block=3)
    source = FrameRepo(tmp_path / "frames")
    source.save_stack(stack)
    service = StackService(source, FrameRepo(tmp_path / "out"), MatrixRepo(tmp_path / "out", fmt="mat1"))

    decomposition = service.run(SolverConfig.tuned(rank=1, max_iter=30))
    assert len(decomposition.background) == 8
    names = sorted(p.name for p in service.output_dir.iterdir())
    assert names == sorted(
        [f"bg_{i:04d}.pgm" for i in range(8)] + [f"fg_{i:04d}.pgm" for i in range(8)] + ["S_raw.mat1"]
    )
    sparse = MatrixRepo(tmp_path / "out", fmt="mat1").find_by_name("S_raw")
    assert np.array_equal(sparse, decomposition.result.sparse)
