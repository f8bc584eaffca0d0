# Copyright 2026 The anomalab Authors.

"""
BaseFuture: time-sliced waiting shared by SweepFuture. Subclasses hold one
concurrent future per key in ``_futures`` and report completion of the
whole sweep through ``done()``.
"""

import time


class BaseFuture(object):

    time_slice = 1.0

    def wait(self, timeout, wait_for_func):
        """
        Wait until every per-key task of the sweep has finished, checking in
        slices of at most time_slice seconds.

        Parameter
            timeout: float
                    Seconds to wait for the sweep.  None waits until every
            key has its result.
            wait_for_func: callable(futures, seconds) -> bool
                    Waits on the per-key futures for at most seconds and
            returns True once none is pending.

        Returns
            True if all keys finished, False if the timeout ran out first.
        """
        if timeout is None:
            result_ready = self.done()
            while not result_ready:
                result_ready = wait_for_func(self._futures, self.time_slice)
        else:
            result_ready = self.done()
            current_time = time.monotonic()
            sleep_until = current_time + timeout
            while (not result_ready) and (current_time < sleep_until):
                if (sleep_until - current_time) >= self.time_slice:
                    result_ready = wait_for_func(self._futures, self.time_slice)
                else:
                    result_ready = wait_for_func(self._futures, sleep_until - current_time)
                current_time = time.monotonic()
        return result_ready
