"""Golden data: the 60 two-qubit stabilizer states.

Each entry is ``(amplitudes, generators, angle)`` where ``amplitudes``
are the four exact basis amplitudes (tokens over {0, 1, -1, i, -i},
normalized so the first non-zero one is 1), ``generators`` is a pair of
generator strings, and ``angle`` classifies the state against |00>:
``0`` parallel, ``k1``/``k2`` for inner-product magnitude 2^(-k/2), or
``orth`` for orthogonal.  Each four-entry row below shares its Pauli
letters and spans an orthogonal basis.
"""

TWO_QUBIT_STATES = [
    # separable
    (("1", "1", "1", "1"), ("IX", "XI"), "k2"),
    (("1", "-1", "1", "-1"), ("-IX", "XI"), "k2"),
    (("1", "1", "-1", "-1"), ("IX", "-XI"), "k2"),
    (("1", "-1", "-1", "1"), ("-IX", "-XI"), "k2"),

    (("1", "1", "i", "i"), ("IX", "YI"), "k2"),
    (("1", "-1", "i", "-i"), ("-IX", "YI"), "k2"),
    (("1", "1", "-i", "-i"), ("IX", "-YI"), "k2"),
    (("1", "-1", "-i", "i"), ("-IX", "-YI"), "k2"),

    (("1", "1", "0", "0"), ("IX", "ZI"), "k1"),
    (("1", "-1", "0", "0"), ("-IX", "ZI"), "k1"),
    (("0", "0", "1", "1"), ("IX", "-ZI"), "orth"),
    (("0", "0", "1", "-1"), ("-IX", "-ZI"), "orth"),

    (("1", "i", "1", "i"), ("IY", "XI"), "k2"),
    (("1", "-i", "1", "-i"), ("-IY", "XI"), "k2"),
    (("1", "i", "-1", "-i"), ("IY", "-XI"), "k2"),
    (("1", "-i", "-1", "i"), ("-IY", "-XI"), "k2"),

    (("1", "i", "i", "-1"), ("IY", "YI"), "k2"),
    (("1", "-i", "i", "1"), ("-IY", "YI"), "k2"),
    (("1", "i", "-i", "1"), ("IY", "-YI"), "k2"),
    (("1", "-i", "-i", "-1"), ("-IY", "-YI"), "k2"),

    (("1", "i", "0", "0"), ("IY", "ZI"), "k1"),
    (("1", "-i", "0", "0"), ("-IY", "ZI"), "k1"),
    (("0", "0", "1", "i"), ("IY", "-ZI"), "orth"),
    (("0", "0", "1", "-i"), ("-IY", "-ZI"), "orth"),

    (("1", "0", "1", "0"), ("IZ", "XI"), "k1"),
    (("0", "1", "0", "1"), ("-IZ", "XI"), "orth"),
    (("1", "0", "-1", "0"), ("IZ", "-XI"), "k1"),
    (("0", "1", "0", "-1"), ("-IZ", "-XI"), "orth"),

    (("1", "0", "i", "0"), ("IZ", "YI"), "k1"),
    (("0", "1", "0", "i"), ("-IZ", "YI"), "orth"),
    (("1", "0", "-i", "0"), ("IZ", "-YI"), "k1"),
    (("0", "1", "0", "-i"), ("-IZ", "-YI"), "orth"),

    (("1", "0", "0", "0"), ("IZ", "ZI"), "0"),
    (("0", "1", "0", "0"), ("-IZ", "ZI"), "orth"),
    (("0", "0", "1", "0"), ("IZ", "-ZI"), "orth"),
    (("0", "0", "0", "1"), ("-IZ", "-ZI"), "orth"),

    # entangled
    (("0", "1", "1", "0"), ("XX", "YY"), "orth"),
    (("1", "0", "0", "-1"), ("-XX", "YY"), "k1"),
    (("1", "0", "0", "1"), ("XX", "-YY"), "k1"),
    (("0", "1", "-1", "0"), ("-XX", "-YY"), "orth"),

    (("1", "0", "0", "i"), ("XY", "YX"), "k1"),
    (("0", "1", "i", "0"), ("-XY", "YX"), "orth"),
    (("0", "1", "-i", "0"), ("XY", "-YX"), "orth"),
    (("1", "0", "0", "-i"), ("-XY", "-YX"), "k1"),

    (("1", "1", "1", "-1"), ("XZ", "ZX"), "k2"),
    (("1", "1", "-1", "1"), ("-XZ", "ZX"), "k2"),
    (("1", "-1", "1", "1"), ("XZ", "-ZX"), "k2"),
    (("1", "-1", "-1", "-1"), ("-XZ", "-ZX"), "k2"),

    (("1", "i", "1", "-i"), ("XZ", "ZY"), "k2"),
    (("1", "i", "-1", "i"), ("-XZ", "ZY"), "k2"),
    (("1", "-i", "1", "i"), ("XZ", "-ZY"), "k2"),
    (("1", "-i", "-1", "-i"), ("-XZ", "-ZY"), "k2"),

    (("1", "1", "i", "-i"), ("YZ", "ZX"), "k2"),
    (("1", "1", "-i", "i"), ("-YZ", "ZX"), "k2"),
    (("1", "-1", "i", "i"), ("YZ", "-ZX"), "k2"),
    (("1", "-1", "-i", "-i"), ("-YZ", "-ZX"), "k2"),

    (("1", "i", "i", "1"), ("YZ", "ZY"), "k2"),
    (("1", "i", "-i", "-1"), ("-YZ", "ZY"), "k2"),
    (("1", "-i", "i", "-1"), ("YZ", "-ZY"), "k2"),
    (("1", "-i", "-i", "1"), ("-YZ", "-ZY"), "k2"),
]

AMPLITUDE_TOKENS = {
    "0": (0, 0), "1": (1, 0), "-1": (-1, 0), "i": (0, 1), "-i": (0, -1),
}
