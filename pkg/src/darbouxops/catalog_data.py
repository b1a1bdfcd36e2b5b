"""Embedded operator families for the low-dimensional catalog.

Each record stores the displayed (eta, omega) family verbatim as entry
strings: rows are separated by ";" and entries by ",".  omega carries the
constant skew offsets inline; records whose source display splits the
zero-order part into a linear matrix and a separate constant matrix keep
that split (field `fconst`).  `moduli` lists continuous structure
parameters together with the rational value used when a single concrete
algebra is needed (dimension counts, structure tags); identity checks are
run with the modulus kept symbolic.

Transcription notes record the few places where the source display is
internally inconsistent (a mirror entry disagreeing with its partner, or a
dropped "+"); in each case the skew/symmetry-consistent reading is stored
and the discrepancy is listed in `notes` so it surfaces in reports.
"""

ENTRIES = [
    # ---------------------------------------------------------------- n = 2
    {
        "name": "A_{2,1}",
        "algebra": "2n_{1,1}",
        "structure": "Abelian",
        "dim": 2,
        "eta": "a11,a12; a12,a22",
        "omega": "0,f12; -f12,0",
        "eta_params": ["a11", "a12", "a22"],
        "f_params": ["f12"],
        "tags": {"abelian": True, "center_dim": 2},
        "source": "dim-2 list",
    },
    # ---------------------------------------------------------------- n = 3
    {
        "name": "A_{3,1}",
        "algebra": "3n_{1,1}",
        "structure": "Abelian",
        "dim": 3,
        "eta": "a11,a12,a13; a12,a22,a23; a13,a23,a33",
        "omega": "0,f12,f13; -f12,0,f23; -f13,-f23,0",
        "eta_params": ["a11", "a12", "a13", "a22", "a23", "a33"],
        "f_params": ["f12", "f13", "f23"],
        "tags": {"abelian": True, "center_dim": 3},
        "source": "dim-3 list",
    },
    {
        "name": "A_{3,2}",
        "algebra": "su(1,1)",
        "structure": "Simple",
        "dim": 3,
        "eta": "0,0,alpha; 0,1/2*alpha,0; alpha,0,0",
        "omega": "0,u1+f12,-2*u2+f13; -u1-f12,0,u3+f23; 2*u2-f13,-u3-f23,0",
        "eta_params": ["alpha"],
        "f_params": ["f12", "f13", "f23"],
        "tags": {"semisimple": True, "solvable": False, "center_dim": 0},
        "source": "dim-3 list",
        "notes": [
            "the (2,3) display entry carries offset f13 while its mirror"
            " (3,2) carries f23; the skew-consistent reading f23 is stored"
        ],
    },
    {
        "name": "A_{3,3}",
        "algebra": "so(3,R)",
        "structure": "Simple",
        "dim": 3,
        "eta": "alpha,0,0; 0,alpha,0; 0,0,alpha",
        "omega": "0,u3+f12,-u2+f13; -u3-f12,0,u1+f23; u2-f13,-u1-f23,0",
        "eta_params": ["alpha"],
        "f_params": ["f12", "f13", "f23"],
        "tags": {"semisimple": True, "solvable": False, "center_dim": 0},
        "source": "dim-3 list",
    },
    # ---------------------------------------------------------------- n = 4
    {
        "name": "A_{4,1}",
        "algebra": "4n_{1,1}",
        "structure": "Abelian",
        "dim": 4,
        "eta": "a11,a12,a13,a14; a12,a22,a23,a24; a13,a23,a33,a34; a14,a24,a34,a44",
        "omega": "0,f12,f13,f14; -f12,0,f23,f24; -f13,-f23,0,f34; -f14,-f24,-f34,0",
        "eta_params": ["a11", "a12", "a13", "a14", "a22", "a23", "a24", "a33", "a34", "a44"],
        "f_params": ["f12", "f13", "f14", "f23", "f24", "f34"],
        "tags": {"abelian": True, "center_dim": 4},
        "source": "dim-4 list",
    },
    {
        "name": "A_{4,2}",
        "algebra": "s_{4,6}",
        "structure": "Solvable",
        "dim": 4,
        "eta": "0,0,0,alpha; 0,0,-alpha,0; 0,-alpha,0,0; alpha,0,0,beta",
        "omega": (
            "0,0,0,0;"
            " 0,0,u1+f23,u2+f24;"
            " 0,-u1-f23,0,-u3+f34;"
            " 0,-u2-f24,u3-f34,0"
        ),
        "eta_params": ["alpha", "beta"],
        "f_params": ["f23", "f24", "f34"],
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-4 list",
    },
    {
        "name": "A_{4,3}",
        "algebra": "s_{4,7}",
        "structure": "Solvable",
        "dim": 4,
        "eta": "0,0,0,alpha; 0,alpha,0,0; 0,0,alpha,0; alpha,0,0,beta",
        "omega": (
            "0,0,0,0;"
            " 0,0,u1+f23,-u3+f24;"
            " 0,-u1-f23,0,u2+f34;"
            " 0,u3-f24,-u2-f34,0"
        ),
        "eta_params": ["alpha", "beta"],
        "f_params": ["f23", "f24", "f34"],
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-4 list",
    },
    {
        "name": "A_{4,4}",
        "algebra": "sl(2,R)+n_{1,1}",
        "structure": "Direct sum",
        "dim": 4,
        "eta": "0,0,alpha,0; 0,1/2*alpha,0,0; alpha,0,0,0; 0,0,0,beta",
        "omega": (
            "0,u1+f12,-2*u2+f13,0;"
            " -u1-f12,0,u3+f23,0;"
            " 2*u2-f13,-u3-f23,0,0;"
            " 0,0,0,0"
        ),
        "eta_params": ["alpha", "beta"],
        "f_params": ["f12", "f13", "f23"],
        "tags": {"solvable": False, "semisimple": False, "center_dim": 1, "split": [3, 1]},
        "source": "dim-4 list",
    },
    {
        "name": "A_{4,5}",
        "algebra": "so(3,R)+n_{1,1}",
        "structure": "Direct sum",
        "dim": 4,
        "eta": "alpha,0,0,0; 0,alpha,0,0; 0,0,alpha,0; 0,0,0,beta",
        "omega": (
            "0,u3+f12,-u2+f13,0;"
            " -u3-f12,0,u1+f23,0;"
            " u2-f13,-u1-f23,0,0;"
            " 0,0,0,0"
        ),
        "eta_params": ["alpha", "beta"],
        "f_params": ["f12", "f13", "f23"],
        "tags": {"solvable": False, "semisimple": False, "center_dim": 1, "split": [3, 1]},
        "source": "dim-4 list",
    },
    # ---------------------------------------------------------------- n = 5
    {
        "name": "A_{5,1}",
        "algebra": "5n_{1,1}",
        "structure": "Abelian",
        "dim": 5,
        "eta": (
            "a11,a12,a13,a14,a15; a12,a22,a23,a24,a25; a13,a23,a33,a34,a35;"
            " a14,a24,a34,a44,a45; a15,a25,a35,a45,a55"
        ),
        "omega": (
            "0,f12,f13,f14,f15; -f12,0,f23,f24,f25; -f13,-f23,0,f34,f35;"
            " -f14,-f24,-f34,0,f45; -f15,-f25,-f35,-f45,0"
        ),
        "eta_params": [f"a{i}{j}" for i in range(1, 6) for j in range(i, 6)],
        "f_params": [f"f{i}{j}" for i in range(1, 6) for j in range(i + 1, 6)],
        "tags": {"abelian": True, "center_dim": 5},
        "source": "dim-5 list",
    },
    {
        "name": "A_{5,2}",
        "algebra": "sl(2,R)+2n_{1,1}",
        "structure": "Direct sum",
        "dim": 5,
        "eta": (
            "0,0,alpha,0,0; 0,1/2*alpha,0,0,0; alpha,0,0,0,0;"
            " 0,0,0,beta,delta; 0,0,0,delta,gamma"
        ),
        "omega": (
            "0,u1+f12,-2*u2+f13,0,0;"
            " -u1-f12,0,u3+f23,0,0;"
            " 2*u2-f13,-u3-f23,0,0,0;"
            " 0,0,0,0,f45;"
            " 0,0,0,-f45,0"
        ),
        "eta_params": ["alpha", "beta", "delta", "gamma"],
        "f_params": ["f12", "f13", "f23", "f45"],
        "tags": {"solvable": False, "semisimple": False, "center_dim": 2, "split": [3, 2]},
        "source": "dim-5 list",
    },
    {
        "name": "A_{5,3}",
        "algebra": "so(3,R)+2n_{1,1}",
        "structure": "Direct sum",
        "dim": 5,
        "eta": (
            "alpha,0,0,0,0; 0,alpha,0,0,0; 0,0,alpha,0,0;"
            " 0,0,0,beta,gamma; 0,0,0,gamma,delta"
        ),
        "omega": (
            "0,u3+f12,-u2+f13,0,0;"
            " -u3-f12,0,u1+f23,0,0;"
            " u2-f13,-u1-f23,0,0,0;"
            " 0,0,0,0,f45;"
            " 0,0,0,-f45,0"
        ),
        "eta_params": ["alpha", "beta", "gamma", "delta"],
        "f_params": ["f12", "f13", "f23", "f45"],
        "tags": {"solvable": False, "semisimple": False, "center_dim": 2, "split": [3, 2]},
        "source": "dim-5 list",
    },
    {
        "name": "A_{5,4}",
        "algebra": "s_{4,6}+n_{1,1}",
        "structure": "Direct sum",
        "dim": 5,
        "eta": (
            "0,0,0,alpha,0; 0,0,-alpha,0,0; 0,-alpha,0,0,0;"
            " alpha,0,0,beta,gamma; 0,0,0,gamma,delta"
        ),
        "omega": (
            "0,0,0,0,0;"
            " 0,0,u1+f23,u2+f24,0;"
            " 0,-u1-f23,0,-u3+f34,0;"
            " 0,-u2-f24,u3-f34,0,f45;"
            " 0,0,0,-f45,0"
        ),
        "eta_params": ["alpha", "beta", "gamma", "delta"],
        "f_params": ["f23", "f24", "f34", "f45"],
        "tags": {"solvable": True, "semisimple": False, "center_dim": 2, "split": [4, 1]},
        "source": "dim-5 list",
    },
    {
        "name": "A_{5,5}",
        "algebra": "s_{4,7}+n_{1,1}",
        "structure": "Direct sum",
        "dim": 5,
        "eta": (
            "0,0,0,alpha,0; 0,alpha,0,0,0; 0,0,alpha,0,0;"
            " alpha,0,0,beta,gamma; 0,0,0,gamma,delta"
        ),
        "omega": (
            "0,0,0,0,0;"
            " 0,0,u1+f23,-u3+f24,0;"
            " 0,-u1-f23,0,u2+f34,0;"
            " 0,u3-f24,-u2-f34,0,f45;"
            " 0,0,0,-f45,0"
        ),
        "eta_params": ["alpha", "beta", "gamma", "delta"],
        "f_params": ["f23", "f24", "f34", "f45"],
        "tags": {"solvable": True, "semisimple": False, "center_dim": 2, "split": [4, 1]},
        "source": "dim-5 list",
    },
    {
        "name": "A_{5,6}",
        "algebra": "n_{5,2}",
        "structure": "3-Step Nilpotent",
        "dim": 5,
        "eta": (
            "0,0,0,alpha,0; 0,0,0,0,-alpha; 0,0,-alpha,0,0;"
            " alpha,0,0,beta,gamma; 0,-alpha,0,gamma,delta"
        ),
        "omega": (
            "0,0,0,f14,f15;"
            " 0,0,0,f24,f14;"
            " 0,0,0,u2+f34,u1+f35;"
            " -f14,-f24,-u2-f34,0,u3+f45;"
            " -f15,-f14,-u1-f35,-u3-f45,0"
        ),
        "eta_params": ["alpha", "beta", "gamma", "delta"],
        "f_params": ["f14", "f15", "f24", "f34", "f35", "f45"],
        "tags": {"nilpotency_class": 3, "center_dim": 2},
        "source": "dim-5 list",
        "notes": ["the (2,5) offset is tied to f14, matching the (1,4) entry"],
    },
    # ---------------------------------------------------------------- n = 6
    {
        "name": "A_{6,1}",
        "algebra": "6n_{1,1}",
        "structure": "Abelian",
        "dim": 6,
        "eta": "; ".join(
            ",".join(f"a{min(i, j)}{max(i, j)}" for j in range(1, 7)) for i in range(1, 7)
        ),
        "omega": "; ".join(
            ",".join(
                "0" if i == j else (f"f{i}{j}" if i < j else f"-f{j}{i}")
                for j in range(1, 7)
            )
            for i in range(1, 7)
        ),
        "eta_params": [f"a{i}{j}" for i in range(1, 7) for j in range(i, 7)],
        "f_params": [f"f{i}{j}" for i in range(1, 7) for j in range(i + 1, 7)],
        "tags": {"abelian": True, "center_dim": 6},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,2}",
        "algebra": "sl(2,R)+3n_{1,1}",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "0,0,g13,0,0,0; 0,2*g13,0,0,0,0; g13,0,0,0,0,0;"
            " 0,0,0,g44,g45,g46; 0,0,0,g45,g55,g56; 0,0,0,g46,g56,g66"
        ),
        "omega": (
            "0,-2*u1+f12,u2+f13,0,0,0;"
            " 2*u1-f12,0,-2*u3+f23,0,0,0;"
            " -u2-f13,2*u3-f23,0,0,0,0;"
            " 0,0,0,0,f45,f46;"
            " 0,0,0,-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g13", "g44", "g45", "g46", "g55", "g56", "g66"],
        "f_params": ["f12", "f13", "f23", "f45", "f46", "f56"],
        "tags": {"solvable": False, "semisimple": False, "center_dim": 3, "split": [3, 3]},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,3}",
        "algebra": "so(3,R)+3n_{1,1}",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "g22,0,0,0,0,0; 0,g22,0,0,0,0; 0,0,g22,0,0,0;"
            " 0,0,0,g44,g45,g46; 0,0,0,g45,g55,g56; 0,0,0,g46,g56,g66"
        ),
        "omega": (
            "0,-u3+f12,u2+f13,0,0,0;"
            " u3-f12,0,-u1+f23,0,0,0;"
            " -u2-f13,u1-f23,0,0,0,0;"
            " 0,0,0,0,f45,f46;"
            " 0,0,0,-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g22", "g44", "g45", "g46", "g55", "g56", "g66"],
        "f_params": ["f12", "f13", "f23", "f45", "f46", "f56"],
        "tags": {"solvable": False, "semisimple": False, "center_dim": 3, "split": [3, 3]},
        "source": "dim-6 appendix",
        "notes": [
            "the display shows diag(g22, 2 g22, g22) on the rotation block,"
            " which violates the compatibility identity; the consistent"
            " isotropic block g22 I is stored"
        ],
    },
    {
        "name": "A_{6,4}",
        "algebra": "so(2,2,R)",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "0,0,g13,0,0,0; 0,2*g13,0,0,0,0; g13,0,0,0,0,0;"
            " 0,0,0,0,0,g46; 0,0,0,0,2*g46,0; 0,0,0,g46,0,0"
        ),
        "omega": (
            "0,-2*u1,u2,0,0,0;"
            " 2*u1,0,-2*u3,0,0,0;"
            " -u2,2*u3,0,0,0,0;"
            " 0,0,0,0,-2*u4,u5;"
            " 0,0,0,2*u4,0,-2*u6;"
            " 0,0,0,-u5,2*u6,0"
        ),
        "fconst": (
            "0,f12,f13,0,0,0;"
            " -f12,0,f23,0,0,0;"
            " -f13,-f23,0,0,0,0;"
            " 0,0,0,0,f45,f46;"
            " 0,0,0,-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g13", "g46"],
        "f_params": ["f12", "f13", "f23", "f45", "f46", "f56"],
        "tags": {"semisimple": True, "center_dim": 0, "split": [3, 3]},
        "source": "dim-6 appendix",
        "notes": [
            "two mirror entries of the constant block print a stray '2 -';"
            " the skew mirrors -f23 and -f45 are stored"
        ],
    },
    {
        "name": "A_{6,5}",
        "algebra": "so(4,R)",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "g22,0,0,0,0,0; 0,g22,0,0,0,0; 0,0,g22,0,0,0;"
            " 0,0,0,g55,0,0; 0,0,0,0,g55,0; 0,0,0,0,0,g55"
        ),
        "omega": (
            "0,-u3,u2,0,0,0;"
            " u3,0,-u1,0,0,0;"
            " -u2,u1,0,0,0,0;"
            " 0,0,0,0,-u6,u5;"
            " 0,0,0,u6,0,-u4;"
            " 0,0,0,-u5,u4,0"
        ),
        "fconst": (
            "0,f12,f13,0,0,0;"
            " -f12,0,f23,0,0,0;"
            " -f13,-f23,0,0,0,0;"
            " 0,0,0,0,f45,f46;"
            " 0,0,0,-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g22", "g55"],
        "f_params": ["f12", "f13", "f23", "f45", "f46", "f56"],
        "tags": {"semisimple": True, "center_dim": 0, "split": [3, 3]},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,6}",
        "algebra": "sl(2,R)+so(3,R)",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "0,0,g13,0,0,0; 0,2*g13,0,0,0,0; g13,0,0,0,0,0;"
            " 0,0,0,g55,0,0; 0,0,0,0,g55,0; 0,0,0,0,0,g55"
        ),
        "omega": (
            "0,-2*u1,u2,0,0,0;"
            " 2*u1,0,-2*u3,0,0,0;"
            " -u2,2*u3,0,0,0,0;"
            " 0,0,0,0,-u6,u5;"
            " 0,0,0,u6,0,-u4;"
            " 0,0,0,-u5,u4,0"
        ),
        "fconst": (
            "0,f12,f13,0,0,0;"
            " -f12,0,f23,0,0,0;"
            " -f13,-f23,0,0,0,0;"
            " 0,0,0,0,f45,f46;"
            " 0,0,0,-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g13", "g55"],
        "f_params": ["f12", "f13", "f23", "f45", "f46", "f56"],
        "tags": {"semisimple": True, "center_dim": 0, "split": [3, 3]},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,7}",
        "algebra": "s_{4,6}+2n_{1,1}",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "0,0,0,g14,0,0; 0,0,g14,0,0,0; 0,g14,0,0,0,0;"
            " g14,0,0,g44,g45,g46; 0,0,0,g45,g55,g56; 0,0,0,g46,g56,g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,-u1+f23,u2+f24,0,0;"
            " 0,u1-f23,0,-u3+f34,0,0;"
            " 0,-u2-f24,u3-f34,0,f45,f46;"
            " 0,0,0,-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g14", "g44", "g45", "g46", "g55", "g56", "g66"],
        "f_params": ["f23", "f24", "f34", "f45", "f46", "f56"],
        "tags": {"solvable": True, "semisimple": False, "center_dim": 3, "split": [4, 2]},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,8}",
        "algebra": "s_{4,7}+2n_{1,1}",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "0,0,0,g14,0,0; 0,-g14,0,0,0,0; 0,0,-g14,0,0,0;"
            " g14,0,0,g44,g45,g46; 0,0,0,g45,g55,g56; 0,0,0,g46,g56,g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,-u1+f23,-u3+f24,0,0;"
            " 0,u1-f23,0,u2+f34,0,0;"
            " 0,u3-f24,-u2-f34,0,f45,f46;"
            " 0,0,0,-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g14", "g44", "g45", "g46", "g55", "g56", "g66"],
        "f_params": ["f23", "f24", "f34", "f45", "f46", "f56"],
        "tags": {"solvable": True, "semisimple": False, "center_dim": 3, "split": [4, 2]},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,9}",
        "algebra": "n_{5,2}+n_{1,1}",
        "structure": "Direct sum",
        "dim": 6,
        "eta": (
            "0,0,0,g14,0,0; 0,0,0,0,-g14,0; 0,0,-g14,0,0,0;"
            " g14,0,0,g44,g45,g46; 0,-g14,0,g45,g55,g56; 0,0,0,g46,g56,g66"
        ),
        "omega": (
            "0,0,0,f14,f15,0;"
            " 0,0,0,f24,f14,0;"
            " 0,0,0,-u2+f34,-u1+f35,0;"
            " -f14,-f24,u2-f34,0,-u3+f45,f46;"
            " -f15,-f14,u1-f35,u3-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g14", "g44", "g45", "g46", "g55", "g56", "g66"],
        "f_params": ["f14", "f15", "f24", "f34", "f35", "f45", "f46", "f56"],
        "tags": {"nilpotency_class": 3, "center_dim": 3, "split": [5, 1]},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,10}",
        "algebra": "n_{6,1}",
        "structure": "2-Step Nilpotent",
        "dim": 6,
        "eta": (
            "0,0,0,g14,0,0; 0,0,0,0,-g14,0; 0,0,-g14,0,0,0;"
            " g14,0,0,g44,g45,g46; 0,-g14,0,g45,g55,g56; 0,0,0,g46,g56,g66"
        ),
        "omega": (
            "0,0,0,f14,f15,0;"
            " 0,0,0,f24,f14,0;"
            " 0,0,0,-u2+f34,-u1+f35,0;"
            " -f14,-f24,u2-f34,0,-u3+f45,f46;"
            " -f15,-f14,u1-f35,u3-f45,0,f56;"
            " 0,0,0,-f46,-f56,0"
        ),
        "eta_params": ["g14", "g44", "g45", "g46", "g55", "g56", "g66"],
        "f_params": ["f14", "f15", "f24", "f34", "f35", "f45", "f46", "f56"],
        "tags": {"nilpotency_class": 2, "center_dim": 3},
        "source": "dim-6 appendix",
        "expect_flags": ["structure-tags"],
        "notes": [
            "the displayed matrices duplicate the n_{5,2}+n_{1,1} entry and"
            " encode a 3-step algebra with an abelian summand, not the"
            " 2-step n_{6,1}; the duplicate is stored verbatim and the tag"
            " mismatch is flagged"
        ],
    },
    {
        "name": "A_{6,11}",
        "algebra": "s_{6,162}",
        "structure": "Solvable",
        "dim": 6,
        "eta": (
            "0,0,0,0,0,a*g16; 0,0,0,a*g16,0,0; 0,0,0,0,g16,0;"
            " 0,a*g16,0,0,0,0; 0,0,g16,0,0,0; a*g16,0,0,0,0,a*g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,0,-u1+f24,0,u2+f26;"
            " 0,0,0,0,-u1+f35,a*u3+f36;"
            " 0,u1-f24,0,0,0,-u4+f46;"
            " 0,0,u1-f35,0,0,-a*u5+f56;"
            " 0,-u2-f26,-a*u3-f36,u4-f46,a*u5-f56,0"
        ),
        "eta_params": ["g16", "g66"],
        "f_params": ["f24", "f26", "f35", "f36", "f46", "f56"],
        "moduli": {"a": "1/3"},
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-6 appendix",
        "notes": [
            "the displayed metric carries entries g16/a; the family is"
            " stored cleared by the overall factor a (same two-parameter"
            " family for every admissible modulus 0 < |a| <= 1)"
        ],
    },
    {
        "name": "A_{6,12}",
        "algebra": "s_{6,163}",
        "structure": "Solvable",
        "dim": 6,
        "eta": (
            "0,0,0,0,0,g16; 0,0,0,g16,-g16,0; 0,0,0,0,g16,0;"
            " 0,g16,0,0,0,0; 0,-g16,g16,0,0,0; g16,0,0,0,0,g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,0,-u1+f24,f25,u2+u3+f26;"
            " 0,0,0,0,-u1+f24,u3+f36;"
            " 0,u1-f24,0,0,0,-u4+f46;"
            " 0,-f25,u1-f24,0,0,-u4-u5+f56;"
            " 0,-u2-u3-f26,-u3-f36,u4-f46,u4+u5-f56,0"
        ),
        "eta_params": ["g16", "g66"],
        "f_params": ["f24", "f25", "f26", "f36", "f46", "f56"],
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-6 appendix",
        "notes": ["the (3,5) offset is tied to f24, matching the (2,4) entry"],
    },
    {
        "name": "A_{6,13}",
        "algebra": "s_{6,164}",
        "structure": "Solvable",
        "dim": 6,
        "eta": (
            "0,0,0,0,0,alpha*g16; 0,0,0,g16,0,0; 0,0,alpha*g16,0,0,0;"
            " 0,g16,0,0,0,0; 0,0,0,0,alpha*g16,0; alpha*g16,0,0,0,0,alpha*g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,0,-u1+f24,0,alpha*u2+f26;"
            " 0,0,0,0,-u1+f35,u5+f36;"
            " 0,u1-f24,0,0,0,-alpha*u4+f46;"
            " 0,0,u1-f35,0,0,-u3+f56;"
            " 0,-alpha*u2-f26,-u5-f36,alpha*u4-f46,u3-f56,0"
        ),
        "eta_params": ["g16", "g66"],
        "f_params": ["f24", "f26", "f35", "f36", "f46", "f56"],
        "moduli": {"alpha": "1/3"},
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-6 appendix",
        "notes": [
            "the displayed metric carries entries g16/alpha; stored cleared"
            " by the overall factor alpha"
        ],
    },
    {
        "name": "A_{6,14}",
        "algebra": "s_{6,165}",
        "structure": "Solvable",
        "dim": 6,
        "eta": (
            "0,0,0,0,0,-alpha^2*g25-g25; 0,0,0,-alpha*g25,g25,0;"
            " 0,0,0,-g25,-alpha*g25,0; 0,-alpha*g25,-g25,0,0,0;"
            " 0,g25,-alpha*g25,0,0,0; -alpha^2*g25-g25,0,0,0,0,g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,0,-u1,0,alpha*u2+u3;"
            " 0,0,0,0,-u1,alpha*u3-u2;"
            " 0,u1,0,0,0,-alpha*u4+u5;"
            " 0,0,u1,0,0,-alpha*u5-u4;"
            " 0,-alpha*u2-u3,-alpha*u3+u2,alpha*u4-u5,alpha*u5+u4,0"
        ),
        "fconst": (
            "0,0,0,0,0,0;"
            " 0,0,0,f24,f25,f26;"
            " 0,0,0,-f25,f24,f36;"
            " 0,-f24,f25,0,0,f46;"
            " 0,-f25,-f24,0,0,f56;"
            " 0,-f26,-f36,-f46,-f56,0"
        ),
        "eta_params": ["g25", "g66"],
        "f_params": ["f24", "f25", "f26", "f36", "f46", "f56"],
        "moduli": {"alpha": "1/3"},
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-6 appendix",
        "notes": [
            "the zero-order display carries no constant offsets; the"
            " separate constant matrix ties (3,5) to f24 and (3,4) to -f25"
        ],
    },
    {
        "name": "A_{6,15}",
        "algebra": "s_{6,166}",
        "structure": "Solvable",
        "dim": 6,
        "eta": (
            "0,0,0,0,0,a*g16; 0,a*g16,0,0,0,0; 0,0,g16,0,0,0;"
            " 0,0,0,a*g16,0,0; 0,0,0,0,g16,0; a*g16,0,0,0,0,a*g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,0,-u1+f24,0,u4+f26;"
            " 0,0,0,0,-u1+f35,a*u5+f36;"
            " 0,u1-f24,0,0,0,-u2+f46;"
            " 0,0,u1-f35,0,0,-a*u3+f56;"
            " 0,-u4-f26,-a*u5-f36,u2-f46,a*u3-f56,0"
        ),
        "eta_params": ["g16", "g66"],
        "f_params": ["f24", "f26", "f35", "f36", "f46", "f56"],
        "moduli": {"a": "1/3"},
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-6 appendix",
        "notes": ["metric stored cleared by the overall factor a"],
    },
    {
        "name": "A_{6,16}",
        "algebra": "s_{6,167}",
        "structure": "Solvable",
        "dim": 6,
        "eta": (
            "0,0,0,0,0,g16; 0,-g16,0,0,-g16,0; 0,0,-g16,g16,0,0;"
            " 0,0,g16,0,0,0; 0,-g16,0,0,0,0; g16,0,0,0,0,g66"
        ),
        "omega": (
            "0,0,0,0,0,0;"
            " 0,0,f23,-u1+f24,0,u3+u4+f26;"
            " 0,-f23,0,0,-u1+f24,-u2+u5+f36;"
            " 0,u1-f24,0,0,0,u5+f46;"
            " 0,0,u1-f24,0,0,-u4+f56;"
            " 0,-u3-u4-f26,u2-u5-f36,-u5-f46,u4-f56,0"
        ),
        "eta_params": ["g16", "g66"],
        "f_params": ["f23", "f24", "f26", "f36", "f46", "f56"],
        "tags": {"solvable": True, "nilpotent": False, "semisimple": False, "center_dim": 1},
        "source": "dim-6 appendix",
        "notes": [
            "the (2,4) display entry reads '-u1f24' with a dropped '+';"
            " the mirror fixes it as -u1+f24, which is stored;"
            " the (3,5) offset is tied to f24"
        ],
    },
    {
        "name": "A_{6,17}",
        "algebra": "so(1,3,R)",
        "structure": "Simple",
        "dim": 6,
        "eta": (
            "-g55,0,0,g25,0,0; 0,-g55,0,0,g25,0; 0,0,-g55,0,0,g25;"
            " g25,0,0,g55,0,0; 0,g25,0,0,g55,0; 0,0,g25,0,0,g55"
        ),
        "omega": (
            "0,-u3,u2,0,-u6,u5;"
            " u3,0,-u1,u6,0,-u4;"
            " -u2,u1,0,-u5,u4,0;"
            " 0,-u6,u5,0,u3,-u2;"
            " u6,0,-u4,-u3,0,u1;"
            " -u5,u4,0,u2,-u1,0"
        ),
        "fconst": (
            "0,f12,f13,0,f15,f16;"
            " -f12,0,f23,-f15,0,f26;"
            " -f13,-f23,0,-f16,-f26,0;"
            " 0,f15,f16,0,-f12,-f13;"
            " -f15,0,f26,f12,0,-f23;"
            " -f16,-f26,0,f13,f23,0"
        ),
        "eta_params": ["g25", "g55"],
        "f_params": ["f12", "f13", "f23", "f15", "f16", "f26"],
        "tags": {"semisimple": True, "center_dim": 0},
        "source": "dim-6 appendix",
    },
    {
        "name": "A_{6,18}",
        "algebra": "so(3,R)x3n_{1,1}",
        "structure": "Levi decomposable",
        "dim": 6,
        "eta": (
            "g22,0,0,g25,0,0; 0,g22,0,0,g25,0; 0,0,g22,0,0,g25;"
            " g25,0,0,0,0,0; 0,g25,0,0,0,0; 0,0,g25,0,0,0"
        ),
        "omega": (
            "0,-u3,u2,0,-u6,u5;"
            " u3,0,-u1,u6,0,-u4;"
            " -u2,u1,0,-u5,u4,0;"
            " 0,-u6,u5,0,0,0;"
            " u6,0,-u4,0,0,0;"
            " -u5,u4,0,0,0,0"
        ),
        "fconst": (
            "0,f12,f13,0,f15,f16;"
            " -f12,0,f23,-f15,0,f26;"
            " -f13,-f23,0,-f16,-f26,0;"
            " 0,f15,f16,0,0,0;"
            " -f15,0,f26,0,0,0;"
            " -f16,-f26,0,0,0,0"
        ),
        "eta_params": ["g22", "g25"],
        "f_params": ["f12", "f13", "f23", "f15", "f16", "f26"],
        "tags": {
            "solvable": False,
            "semisimple": False,
            "nilpotent": False,
            "center_dim": 0,
        },
        "source": "dim-6 appendix",
    },
    # ------------------------------------------------------------- extras
    {
        "name": "sl3",
        "algebra": "sl(3,R)",
        "structure": "Simple",
        "dim": 8,
        "eta": (
            "2*alpha,alpha,0,0,0,0,0,0;"
            " alpha,2*alpha,0,0,0,0,0,0;"
            " 0,0,0,0,alpha,0,0,0;"
            " 0,0,0,0,0,0,alpha,0;"
            " 0,0,alpha,0,0,0,0,0;"
            " 0,0,0,0,0,0,0,alpha;"
            " 0,0,0,alpha,0,0,0,0;"
            " 0,0,0,0,0,alpha,0,0"
        ),
        "omega": (
            "0,0,u3,2*u4,-u5,u6,-2*u7,-u8;"
            " 0,0,-u3,u4,u5,2*u6,-u7,-2*u8;"
            " -u3,u3,0,0,u1-u2,u4,-u8,0;"
            " -2*u4,-u4,0,0,-u6,0,u1,u3;"
            " u5,-u5,u2-u1,u6,0,0,0,-u7;"
            " -u6,-2*u6,-u4,0,0,0,u5,u2;"
            " 2*u7,u7,u8,-u1,0,-u5,0,0;"
            " u8,2*u8,0,-u3,u7,-u2,0,0"
        ),
        "fconst": (
            "0,0,-f23,2*f24,-f25,f16,2*f27,f18;"
            " 0,0,f23,f24,f25,2*f16,f27,2*f18;"
            " f23,-f23,0,0,f35,f24,f18,0;"
            " -2*f24,-f24,0,0,-f16,0,f47,-f23;"
            " f25,-f25,-f35,f16,0,0,0,f27;"
            " -f16,-2*f16,-f24,0,0,0,f25,f47-f35;"
            " -2*f27,-f27,-f18,-f47,0,-f25,0,0;"
            " -f18,-2*f18,0,f23,-f27,f35-f47,0,0"
        ),
        "eta_params": ["alpha"],
        "f_params": ["f23", "f24", "f25", "f16", "f27", "f18", "f35", "f47"],
        "tags": {"semisimple": True, "center_dim": 0},
        "source": "rank-2 worked example",
    },
    {
        "name": "g2",
        "algebra": "g2 (split)",
        "structure": "Simple",
        "dim": 14,
        "eta": (
            "-6*alpha,3*alpha,0,0,0,0,0,0,0,0,0,0,0,0;"
            " 3*alpha,-2*alpha,0,0,0,0,0,0,0,0,0,0,0,0;"
            " 0,0,0,0,0,0,0,0,3*alpha,0,0,0,0,0;"
            " 0,0,0,0,0,0,0,0,0,alpha,0,0,0,0;"
            " 0,0,0,0,0,0,0,0,0,0,3*alpha,0,0,0;"
            " 0,0,0,0,0,0,0,0,0,0,0,3*alpha,0,0;"
            " 0,0,0,0,0,0,0,0,0,0,0,0,alpha,0;"
            " 0,0,0,0,0,0,0,0,0,0,0,0,0,alpha;"
            " 0,0,3*alpha,0,0,0,0,0,0,0,0,0,0,0;"
            " 0,0,0,alpha,0,0,0,0,0,0,0,0,0,0;"
            " 0,0,0,0,3*alpha,0,0,0,0,0,0,0,0,0;"
            " 0,0,0,0,0,3*alpha,0,0,0,0,0,0,0,0;"
            " 0,0,0,0,0,0,alpha,0,0,0,0,0,0,0;"
            " 0,0,0,0,0,0,0,alpha,0,0,0,0,0,0"
        ),
        "omega": (
            "0,0,2*u3,-3*u4,-u5,u6,3*u7,0,-2*u9,3*u10,u11,-u12,-3*u13,0;"
            " 0,0,-u3,2*u4,u5,0,-u7,u8,u9,-2*u10,-u11,0,u13,-u14;"
            " -2*u3,u3,0,u5,2*u6,-3*u7,0,0,-u1,0,-3*u10,-2*u11,u12,0;"
            " 3*u4,-2*u4,-u5,0,0,0,-u8,0,0,-u2,u9,0,0,u13;"
            " u5,-u5,-2*u6,0,0,-3*u8,0,0,3*u4,-u3,-u1-3*u2,2*u9,0,u12;"
            " -u6,0,3*u7,0,3*u8,0,0,0,2*u5,0,-2*u3,-2*u1-3*u2,-u9,-u11;"
            " -3*u7,u7,0,u8,0,0,0,0,-u6,0,0,u3,-u1-u2,-u10;"
            " 0,-u8,0,0,0,0,0,0,0,-u7,-u6,u5,u4,-u1-2*u2;"
            " 2*u9,-u9,u1,0,-3*u4,-2*u5,u6,0,0,u11,2*u12,-3*u13,0,0;"
            " -3*u10,2*u10,0,u2,u3,0,0,u7,-u11,0,0,0,-u14,0;"
            " -u11,u11,3*u10,-u9,u1+3*u2,2*u3,0,u6,-2*u12,0,0,-3*u14,0,0;"
            " u12,0,2*u11,0,-2*u9,2*u1+3*u2,-u3,-u5,3*u13,0,3*u14,0,0,0;"
            " 3*u13,-u13,-u12,0,0,u9,u1+u2,-u4,0,u14,0,0,0,0;"
            " 0,u14,0,-u13,-u12,u11,u10,u1+2*u2,0,0,0,0,0,0"
        ),
        "fconst": (
            "0,0,a1,a2,a3,a4,a5,0,0,-3*a7,0,0,-3*a7,0;"
            " 0,0,-1/2*a1,-2/3*a2,-a3,0,-1/3*a5,a6,0,2*a7,0,0,a7,a10;"
            " -a1,1/2*a1,0,-a3,2*a4,-a5,0,0,a9-a8,0,3*a7,0,0,0;"
            " -a2,2/3*a2,a3,0,0,0,-a6,0,0,a8,0,0,0,a7;"
            " -a3,a3,-2*a4,0,0,-3*a6,0,0,-a2,-1/2*a1,2*a8+a9,0,0,0;"
            " -a4,0,a5,0,3*a6,0,0,0,-2*a3,0,-a1,a8+2*a9,0,0;"
            " -a5,1/3*a5,0,a6,0,0,0,0,-a4,0,0,1/2*a1,a9,a7;"
            " 0,-a6,0,0,0,0,0,0,0,-1/3*a5,-a4,-a3,-1/3*a2,a8+a9;"
            " 0,0,a8-a9,0,a2,2*a3,a4,0,0,0,0,-3*a7,0,0;"
            " 3*a7,-2*a7,0,-a8,1/2*a1,0,0,1/3*a5,0,0,0,0,a10,0;"
            " 0,0,-3*a7,0,-2*a8-a9,a1,0,a4,0,0,0,3*a10,0,0;"
            " 0,0,0,0,0,-a8-2*a9,-1/2*a1,a3,3*a7,0,-3*a10,0,0,0;"
            " 3*a7,-a7,0,0,0,0,-a9,1/3*a2,0,-a10,0,0,0,0;"
            " 0,-a10,0,-a7,0,0,-a7,-a8-a9,0,0,0,0,0,0"
        ),
        "eta_params": ["alpha"],
        "f_params": ["a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10"],
        "tags": {"semisimple": True, "center_dim": 0},
        "source": "rank-2 exceptional appendix",
        "expect_flags": ["f-param-count"],
        "notes": [
            "the displayed cocycle family has 10 parameters; the computed"
            " cocycle space of a 14-dimensional algebra with vanishing"
            " second cohomology is 14-dimensional, so the family cannot be"
            " a basis and the count mismatch is flagged"
        ],
    },
]
