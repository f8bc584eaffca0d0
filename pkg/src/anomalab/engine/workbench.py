# Copyright 2026 The anomalab Authors.

"""
Workbench: run the registered experiments from Python.  Experiments are
exposed as callable attributes, so ``wb.blowup(eps=0.1)`` runs the same
computation as ``anomalab blowup --eps 0.1``.
"""

import concurrent.futures
import logging
import weakref

from anomalab.engine.futureresult import FutureResult
from anomalab.engine.sweepfuture import SweepFuture
from anomalab.errors import RejectedExecutionError
from anomalab.messages import get_message

logger = logging.getLogger(__name__)


class ExperimentFunc(object):
    """
    Reference to a registered experiment.  Keyword arguments are the run
    parameters of the experiment, plus the optional ``background`` flag.
    """

    def __init__(self, workbench, name):
        self.__dict__["_workbench"] = weakref.ref(workbench)
        self.__dict__["_name"] = name

    def __setattr__(self, kw, value):
        raise AttributeError(get_message('AttrCannotBeAdded', type(self).__name__))

    def __call__(self, **kwargs):
        from anomalab import experiments

        workbench = self.__validate_workbench()
        background = kwargs.pop('background', False)
        if not isinstance(background, bool):
            raise TypeError(get_message('BackgroundMustBeBool'))
        run = experiments.get_experiment(self._name)
        logger.debug("workbench running %s with %s", self._name, kwargs)
        task = workbench._executor.submit(run, **kwargs)
        future = FutureResult(SweepFuture([self._name], [task], single=True))
        if background:
            return future
        return future.result()

    def __validate_workbench(self):
        workbench = self._workbench()
        if workbench is None or not workbench._is_open():
            raise RejectedExecutionError(get_message('WorkbenchClosed'))
        return workbench


class Workbench(object):
    """
    A Workbench owns a small worker pool for experiments.  It is kept
    separate from the sweep pool so an experiment may run sweeps of its own
    without waiting on itself.

    <experiment>(**params, background=False)

        Parameters
            params:
                Run parameters of the experiment, named as in the
            configuration file.
            background: bool
                Return a FutureResult immediately instead of the result.

        Returns
            ExperimentResult, or a FutureResult holding one.

        Raises
            RejectedExecutionError - if the workbench is closed.
            ValidationError - if the experiment name or a parameter is invalid.
            NumericalError - if the computation cannot reach its accuracy.
    """

    def __init__(self, max_workers=2):
        self.__dict__["_executor"] = concurrent.futures.ThreadPoolExecutor(
            max_workers=max_workers, thread_name_prefix="anomalab-workbench")

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.close()

    def close(self):
        """Stop accepting experiments and wait for the running ones."""
        if self._is_open():
            self.__dict__.pop("_executor").shutdown(wait=True)

    def experiments(self):
        from anomalab import experiments

        return experiments.experiment_names()

    def __getattr__(self, name):
        """Dynamic attribute of Workbench"""
        from anomalab import experiments

        if name.startswith('_') or name not in experiments.experiment_names():
            raise AttributeError(get_message('UnknownExperiment', name))
        return ExperimentFunc(self, name)

    def __setattr__(self, kw, value):
        raise AttributeError(get_message('AttrCannotBeAdded', type(self).__name__))

    def __del__(self):
        if "_executor" in self.__dict__:
            self.__dict__.pop("_executor").shutdown(wait=False)

    def _is_open(self):
        return "_executor" in self.__dict__
