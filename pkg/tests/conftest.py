import sympy
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

X = sympy.Symbol("x")


def to_sympy(p):
    """Constant-first coefficient tuple -> sympy Poly."""
    return sympy.Poly(list(reversed(p)) or [0], X, domain="QQ")


def sympy_charpoly(m):
    cp = sympy.Matrix(m).charpoly(X)
    return tuple(int(c) for c in reversed(cp.all_coeffs()))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome, props))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n, outcome, props in sorted(lines):
        word = "PASS" if outcome == "passed" else "FAIL"
        detail = f" ({props['detail']})" if "detail" in props else ""
        terminalreporter.write_line(f"{word} criterion {n}: {props['title']}{detail}")
