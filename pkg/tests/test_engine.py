# Copyright 2026 The anomalab Authors.

import concurrent.futures
import threading

import pytest

from anomalab import engine
from anomalab.engine import FutureResult, SweepFuture, Workbench
from anomalab.engine.sweepfuture import _wait_all
from anomalab.errors import RejectedExecutionError


def test_map_keys_keeps_key_order():
    assert engine.map_keys(lambda k: k * k, [3, 1, 2]) == [9, 1, 4]


def test_map_keys_empty():
    assert engine.map_keys(lambda k: k, []) == []


def test_map_keys_in_background():
    future = engine.map_keys(lambda eps: 1.0 / eps, [0.5, 0.25], background=True)
    assert isinstance(future, FutureResult)
    assert future.result(timeout=30) == [2.0, 4.0]
    assert future.done()
    assert not future.cancelled()


def test_map_keys_raises_first_failure():
    def func(k):
        if k == 2:
            raise ValueError("bad key")
        return k

    with pytest.raises(ValueError, match="bad key"):
        engine.map_keys(func, [1, 2, 3])


@pytest.mark.parametrize("kwargs", [{"background": 1}, {"block": True}])
def test_map_keys_rejects_keywords(kwargs):
    with pytest.raises(TypeError):
        engine.map_keys(lambda k: k, [1], **kwargs)


class TestFutureResult:

    def test_timeout(self):
        release = threading.Event()
        future = engine.map_keys(lambda k: release.wait(30), [0], background=True)
        try:
            with pytest.raises(TimeoutError):
                future.result(timeout=0.05)
            assert not future.done()
        finally:
            release.set()
        assert future.result() == [True]

    @pytest.mark.parametrize("timeout", [-1, "1", True])
    def test_bad_timeout(self, timeout):
        future = engine.map_keys(lambda k: k, [0], background=True)
        with pytest.raises(TypeError):
            future.result(timeout=timeout)

    def test_result_is_cached(self):
        future = engine.map_keys(lambda k: [k], [0], background=True)
        assert future.result() is future.result()


class TestSweepFuture:

    def _pending(self, count):
        futures = [concurrent.futures.Future() for _ in range(count)]
        sweep = SweepFuture([0.1, 0.05, 0.025][:count], futures)
        sweep.time_slice = 0.01
        return sweep, futures

    def test_wait_runs_out_while_a_key_is_pending(self):
        sweep, futures = self._pending(3)
        futures[0].set_result(1.0)
        futures[2].set_result(3.0)
        assert not sweep.wait(0.05, _wait_all)
        assert not sweep.done()

    def test_wait_without_timeout_covers_several_slices(self):
        sweep, futures = self._pending(3)
        for i in (2, 0):
            futures[i].set_result(float(i))
        timer = threading.Timer(0.05, futures[1].set_result, args=(1.0,))
        timer.start()
        try:
            assert sweep.wait(None, _wait_all)
        finally:
            timer.join()
        assert sweep.result() == [0.0, 1.0, 2.0]
        assert sweep.keys() == [0.1, 0.05, 0.025]


class TestWorkbench:

    def test_lists_experiments(self, workbench):
        names = workbench.experiments()
        assert {"identities", "blowup", "forecast", "report"} <= set(names)

    def test_runs_an_experiment(self, workbench):
        result = workbench.identities(check="u0sq")
        assert result.passed
        assert result.checks[0].line() == "u0^2 == -u0' : EXACT PASS"

    def test_runs_in_background(self, workbench):
        future = workbench.fourier(k_max=4, background=True)
        assert isinstance(future, FutureResult)
        assert future.result(timeout=60).summary == {"k_max": 4}

    def test_background_must_be_bool(self, workbench):
        with pytest.raises(TypeError):
            workbench.fourier(background="yes")

    def test_unknown_experiment(self, workbench):
        with pytest.raises(AttributeError):
            workbench.no_such_experiment

    def test_attributes_cannot_be_added(self, workbench):
        with pytest.raises(AttributeError):
            workbench.extra = 1
        with pytest.raises(AttributeError):
            workbench.fourier.extra = 1

    def test_closed_workbench_rejects_work(self):
        workbench = engine.start_workbench()
        run = workbench.fourier
        workbench.close()
        workbench.close()
        with pytest.raises(RejectedExecutionError):
            run(k_max=2)


def test_start_workbench_in_background():
    future = engine.start_workbench(background=True)
    assert future.done()
    workbench = future.result()
    assert isinstance(workbench, Workbench)
    workbench.close()
