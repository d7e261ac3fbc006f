"""Smoke test for the grothen_py extension.

Uses an installed grothen_py when available; otherwise builds the extension
with cargo and loads it from target/.
"""

import importlib
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "crates" / "cli" / "fixtures"


def load():
    try:
        return importlib.import_module("grothen_py")
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "grothen-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "libgrothen_py.so"
    if not built.exists():
        built = ROOT / "target" / "release" / "libgrothen_py.dylib"
    where = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(built, where / "grothen_py.so")
    sys.path.insert(0, str(where))
    return importlib.import_module("grothen_py")


def main():
    g = load()

    z4 = g.Monoid.from_json((FIXTURES / "z4.json").read_text())
    assert len(z4) == 4 and z4.op("3", "2") == "1"
    group, unit = g.gr_pairs(z4)
    assert str(group) == "Z/4"
    assert group.invariant_factors == [4] and group.order() == 4
    assert len(unit) == 4

    sat = g.Monoid.saturating(3)
    m = g.Monoid.cyclic(2).product(sat)
    answers = {
        str(g.gr_pairs(m)[0]),
        str(g.gr_presentation(m)[0]),
        str(g.pi1_abelianized(m)),
        str(g.h1_bar(m)),
    }
    assert answers == {"Z/2"}, answers
    assert len(g.telescope(sat, "2")) == 1

    q, classes = g.quotient(z4, ["2"])
    assert classes == [["0", "2"], ["1", "3"]] and q.is_group()
    assert str(g.rho(z4, ["2"])) == "Z/2"

    s3 = g.Monoid.from_json((FIXTURES / "s3.json").read_text())
    assert s3.conjugacy_class_count() == 3
    try:
        g.gr_pairs(s3)
    except g.GrothenError as e:
        assert "NotCommutative" in str(e)
    else:
        raise AssertionError("non-commutative input accepted")

    x = g.KuModule("8*ku + S^2(ku)")
    assert str(x.pi(2)) == "Z^9"
    assert str(x.bott_cokernel(2)) == "Z"
    assert x.suspension_degree() == 2
    assert str(g.KuModule("ku/2").smash(g.KuModule("ku/4"))) == "ku/2 + S(ku/2)"
    assert str(g.KuModule("3*ku").free_product(g.KuModule("5*ku"))) == "7*ku"
    assert str(g.kdef_finite_group(5)) == "5*ku"
    assert g.AbelianGroup(1, [2, 3]) == g.AbelianGroup(1, [6])
    print("grothen_py smoke test passed")


if __name__ == "__main__":
    main()
