# Copyright 2026 The anomalab Authors.

import concurrent.futures
import logging
import os
import threading

from anomalab.engine.sweepfuture import SweepFuture

logger = logging.getLogger(__name__)


class SweepSession(object):
    """
    Owns the worker pool shared by all sweeps of the process. The pool is
    created on first use and released at interpreter exit.
    """

    def __init__(self, max_workers=None):
        self._lock = threading.Lock()
        self._pool = None
        self._max_workers = max_workers or min(8, os.cpu_count() or 1)

    def _executor(self):
        with self._lock:
            if self._pool is None:
                logger.debug("starting sweep pool with %d workers", self._max_workers)
                self._pool = concurrent.futures.ThreadPoolExecutor(
                    max_workers=self._max_workers, thread_name_prefix="anomalab-sweep")
            return self._pool

    def submit_all(self, func, keys):
        keys = list(keys)
        pool = self._executor()
        futures = [pool.submit(func, key) for key in keys]
        return SweepFuture(keys, futures)

    def release(self):
        with self._lock:
            if self._pool is not None:
                self._pool.shutdown(wait=False, cancel_futures=True)
                self._pool = None
