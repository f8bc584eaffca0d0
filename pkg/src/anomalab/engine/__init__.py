# Copyright 2026 The anomalab Authors.

"""
The engine runs independent numerical tasks (one per eps value, region or
experiment) on a shared worker pool, either synchronously or in the
background.  With background execution a FutureResult is returned
immediately; call its "done" function to check if the work has finished, and
its "result" function to obtain the results, merged in key order.

This example runs a small sweep and an experiment:

>>> import anomalab.engine
>>> anomalab.engine.map_keys(lambda eps: 1.0 / eps, [0.5, 0.25])
[2.0, 4.0]
>>> with anomalab.engine.start_workbench() as wb:
...     wb.blowup(eps=0.25).summary["t_blowup"] > 0
True
"""

import atexit
import concurrent.futures
import threading
import weakref

"""
This lock makes sure the global variable _workbenches is updated correctly
when workbenches are started from several threads.
"""
_engine_lock = threading.RLock()
_workbenches = []

from anomalab.engine.basefuture import BaseFuture
from anomalab.engine.sweepfuture import SweepFuture
from anomalab.engine.futureresult import FutureResult
from anomalab.engine.sweepsession import SweepSession
from anomalab.engine.workbench import Workbench, ExperimentFunc
from anomalab.engine import enginehelper

_session = SweepSession()


def map_keys(func, keys, **kwargs):
    """
    Evaluate func(key) for every key on the shared pool.

    Parameters
        func: callable - a function of one key.  It must not call map_keys
        itself.
        keys: iterable - the keys, for instance a decreasing eps list.
        background: bool - return a FutureResult immediately.  Optional and
        false by default.

    Returns
        list - func(key) for every key, in key order, if background is false.
        FutureResult - if background is true.

    Raises
        Any exception raised by func, for the first key that failed.
    """
    background = enginehelper._get_background_argument(kwargs)
    future = FutureResult(_session.submit_all(func, keys))
    if not background:
        return future.result()
    else:
        return future


def start_workbench(max_workers=2, **kwargs):
    """
    Start a Workbench for running experiments from Python.

    Parameters
        max_workers: int - number of experiments that can run at once.
        background: bool - accepted for symmetry with map_keys; a workbench
        starts instantly, so the FutureResult is already done.

    Returns
        Workbench - if background is false.
        FutureResult - if background is true.
    """
    background = enginehelper._get_background_argument(kwargs)
    with _engine_lock:
        workbench = Workbench(max_workers)
        _workbenches.append(weakref.ref(workbench))
    if not background:
        return workbench
    done = SweepFuture(["workbench"], [_completed(workbench)], single=True)
    return FutureResult(done)


def _completed(value):
    future = concurrent.futures.Future()
    future.set_result(value)
    return future


@atexit.register
def __exit_workbenches():
    for workbench in _workbenches:
        if workbench() is not None:
            workbench().close()
    _session.release()
