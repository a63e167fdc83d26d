"""Every acceptance criterion, one test each; a pass/fail line per criterion
is printed in the terminal summary."""

import pytest

from stabletwist.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c.number:02d}" for c in CRITERIA])
def test_criterion(criterion, acceptance_log):
    label = f"{criterion.number:2d} {criterion.title}"
    if criterion.check is None:
        acceptance_log.append(f"SKIP {label}")
        print(f"SKIP {label}")
        pytest.skip("large-n group cohomology is not computable at this scale")
    try:
        detail = criterion.check()
    except AssertionError as exc:
        acceptance_log.append(f"FAIL {label}: {exc}")
        print(f"FAIL {label}: {exc}")
        raise
    acceptance_log.append(f"PASS {label}: {detail}")
    print(f"PASS {label}: {detail}")
