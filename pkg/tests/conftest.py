import pytest

from zmodn import kernels


def naive_factor(n):
    """Trial division by every integer; shares no code with zmodn.factor."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_nilpotent(n, m):
    """Def. of a nilpotent element, searched literally over r in [0, n)."""
    if m == 0:
        return True
    J = max([2] + list(naive_factor(n).values()))
    for r in range(n):
        if r * m % n == 0:
            continue
        for j in range(2, J + 1):
            if pow(r, j, n) * m % n == 0:
                return True
    return False


def naive_closure(n, elements):
    """Close a subset of Z/n under addition by repeated pairwise sums."""
    S = {0} | {e % n for e in elements}
    while True:
        new = {(a + b) % n for a in S for b in S} | S
        if new == S:
            return sorted(S)
        S = new


def naive_torsion(n):
    """Check p^2 m = 0 => p m = 0 for every prime p <= n, every m."""
    primes = [p for p in range(2, n + 1) if all(p % q for q in range(2, p))]
    return all(not (p * p * m % n == 0 and p * m % n != 0) for p in primes for m in range(n))


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    previous = kernels.backend()
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


_acceptance = {}


def pytest_addoption(parser):
    parser.addoption(
        "--kernel-backend",
        choices=["compiled", "python"],
        help="run the whole suite on one enumeration backend",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit-criterion test")
    chosen = config.getoption("--kernel-backend")
    if chosen:
        kernels.use_backend(chosen)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _acceptance[report.nodeid] = report.outcome, report.duration


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section(f"acceptance criteria ({kernels.backend()} kernels)")
    import test_acceptance

    for nodeid, (outcome, duration) in sorted(_acceptance.items()):
        name = nodeid.rsplit("::", 1)[-1]
        doc = (getattr(test_acceptance, name).__doc__ or name).strip()
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {doc}  ({duration:.2f}s)")
