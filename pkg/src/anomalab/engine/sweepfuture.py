# Copyright 2026 The anomalab Authors.

"""
SweepFuture: placeholder for a batch of independent tasks, one per key
(an eps value, a region, an experiment). Results are merged in key order
whatever order the tasks finish in.
"""

import concurrent.futures

from anomalab.engine.basefuture import BaseFuture
from anomalab.messages import get_message


def _wait_all(futures, seconds):
    _, pending = concurrent.futures.wait(futures, timeout=seconds)
    return not pending


class SweepFuture(BaseFuture):
    """
    A SweepFuture should only be created by SweepSession.submit_all.
    """

    def __init__(self, keys, futures, single=False):
        self._keys = list(keys)
        self._futures = list(futures)
        self._single = single
        self._retrieved = False
        self._result = None

    def result(self, timeout=None):
        """
        Collect the task results.

        Returns
            list of results ordered like the keys, or the bare result for a
            single task.

        Raises
            TimeoutError - if the tasks do not finish in timeout seconds.
            CancelledError - if a task was cancelled.
            Any exception raised by a task.
        """
        if self._retrieved:
            return self._result

        result_ready = self.wait(timeout, _wait_all)
        if not result_ready:
            raise TimeoutError(get_message('SweepTimeout'))

        values = [f.result() for f in self._futures]
        self._result = values[0] if self._single else values
        self._retrieved = True
        return self._result

    def keys(self):
        return list(self._keys)

    def cancel(self):
        cancelled = [f.cancel() for f in self._futures]
        return all(cancelled)

    def cancelled(self):
        return any(f.cancelled() for f in self._futures)

    def done(self):
        return all(f.done() for f in self._futures)
