# Copyright 2026 The anomalab Authors.

"""
FutureResult: the class of the future returned by background calls.

An instance of FutureResult is returned from every call made with
background=True: map_keys, start_workbench and Workbench.<experiment>.  The
future result is a placeholder that is filled when the computation finishes.
It can be used to cancel pending work, check the completion status, and get
the actual result.
"""

from anomalab.messages import get_message


class FutureResult():
    """
    A FutureResult object holds the future result of a sweep or experiment.
    """

    def __init__(self, future):
        self.__future = future

    def result(self, timeout=None):
        """
        Get the result of the computation.

        Parameter
            timeout: int or float
                    Number of seconds to wait before returning.  By default,
            this function waits until the result is available.

        Returns
            The result of the sweep (a list ordered by key) or experiment.

        Raises
            TypeError - if timeout is not a non-negative number.
            TimeoutError - if the result is not available in timeout seconds.
            CancelledError - if the computation was cancelled.
        """
        if timeout is not None:
            if isinstance(timeout, bool) or not isinstance(timeout, (int, float)):
                raise TypeError(get_message('TimeoutMustBeNumeric', type(timeout).__name__))

            if timeout < 0:
                raise TypeError(get_message('TimeoutCannotBeNegative'))

        return self.__future.result(timeout)

    def cancel(self):
        """
        Cancel the pending tasks.

        Returns
            bool - True if every task could be cancelled; False otherwise.
        """
        return self.__future.cancel()

    def cancelled(self):
        """
        Returns
            bool - True if the computation was cancelled; False otherwise.
        """
        return self.__future.cancelled()

    def done(self):
        """
        Returns
            bool - True if the computation has finished, including by error
            or cancellation; False otherwise.
        """
        return self.__future.done()
