"""Smoke tests for the python module (built into <build>/python)."""

import json

import imverma


def test_scalars():
    assert imverma.q_int(2) == "v^-2 + v^2"
    assert imverma.g_coeff(0) == "v^4"
    assert imverma.g_coeff_inverse(0) == "v^-4"
    assert imverma.scalar_valuation("v^-2 + 1") == -2
    assert imverma.scalar_arith("1 + v^4", "*", "v^-4") == "v^-4 + 1"


def test_normal_form():
    nf = json.loads(imverma.nf([0, 2]))
    assert nf == [
        {"coeff": "-1 + v^4", "monomial": [1, 1]},
        {"coeff": "v^4", "monomial": [2, 0]},
    ]
    prod = json.loads(imverma.multiply(imverma.nf([0]), imverma.nf([1])))
    assert prod == [{"coeff": "v^4", "monomial": [1, 0]}]


def test_omega_operators():
    psi = json.loads(imverma.omega("psi", 0, imverma.nf([0, 0])))
    assert psi == [{"coeff": "1 + v^4", "monomial": [0]}]
    phi = json.loads(imverma.omega("phi", 0, imverma.nf([0, 0])))
    assert phi == [{"coeff": "v^-4 + 1", "monomial": [0]}]
    assert json.loads(imverma.omega("psi", 3, imverma.nf([]))) == []


def test_pairing_and_gram():
    assert imverma.pair_form([0, 0], [0, 0]) == "1 + v^4"
    assert imverma.pair_form([1, -1], [0, 0]) == "0"
    gram = json.loads(imverma.gram(2, 0, -1, 1))
    assert gram["basis"] == [[0, 0], [1, -1]]
    assert gram["entries_mod_q2"] == [["1", "0"], ["0", "1"]]


def test_module_actions():
    vec = json.dumps({"lambda": {"h": "1", "d": "0"},
                      "element": [{"coeff": "1", "monomial": [1]}]})
    raised = json.loads(imverma.act("xp", -1, vec))
    assert raised["element"] == [{"coeff": "1", "monomial": []}]
    lowered = json.loads(imverma.act("xm", 2, vec))
    assert lowered["element"] == [{"coeff": "1", "monomial": [2, 1]}]


def test_singular_vectors():
    assert imverma.singular_vectors(1, 2, -2, 2, "1", "0") == []
    boundary = imverma.singular_vectors(1, 2, -2, 2, "0", "0")
    assert [json.loads(v) for v in boundary] == [[{"coeff": "1", "monomial": [2]}]]
    # the Cartan tails keep length-2 windows clean even at lambda(h) = 1
    assert imverma.singular_vectors(2, 0, -1, 1, "1", "0") == []


def test_crystal_ops():
    assert imverma.crystal_xminus(2, 1, [1, 0]) == (1, [2, 1, 0])
    assert imverma.crystal_xminus(0, 1, [1, 0]) is None
    assert imverma.crystal_xminus(-5, 1, [0]) == (-1, [-1, -4])
    assert imverma.crystal_omega(1, 1, [1, 0]) == (-1, [2])
    assert imverma.crystal_omega(5, 1, [1, 0]) is None


def test_lattice_membership():
    assert imverma.lattice_membership("(1)/(1 + v^4)") == ("member", "member")
    assert imverma.lattice_membership("v^-3") == ("non-member", "member")


def test_run_suite():
    report = json.loads(imverma.run_suite("gseries"))
    assert report["pass"] is True
    assert report["cells"] > 0
    assert "gseries" in imverma.suite_names()


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
