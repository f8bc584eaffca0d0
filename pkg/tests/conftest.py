# Copyright 2026 The anomalab Authors.

import pytest

from anomalab.engine import start_workbench
from anomalab.testfn import TestFn


@pytest.fixture
def bump():
    return TestFn.bump()


@pytest.fixture
def shifted_bump():
    return TestFn.bump(0.3, 1.0)


@pytest.fixture
def workbench():
    with start_workbench(max_workers=2) as wb:
        yield wb
