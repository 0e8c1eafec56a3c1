"""Reference values frozen from tests/oracles.py (40-digit mpmath).

test_oracles.py recomputes every entry.  Keys name the quantity, not the
route used to obtain it.
"""

GOLDEN = {
    "digamma_half": -1.9635100260214234794,
    "euler_gamma": 0.57721566490153286061,
    "log_gamma_10_5": 13.940625219403763633,
    "vardi": -0.26044280630098844554,
    "vardi_second": -0.12632148170620903637,
    "loglog_cos_pi_4": -0.095022647955447234082,
    "loglog_minus_one": -0.67171960188587454235,
    "sech_log": 0.24156447527049044469,
    "exp_log_sqrt": -3.4802309069132620269,
    "l_half_pi_1": 0.24156447527049044469,
    "l_half_pi_3": 1.1447298858494001741,
    "l_two_thirds_pi_1_5": 1.0804718550498953654,
    "frakl_half_pi_0": -1.4842309590486009965,
    "sin_log_pi_2": -0.19290131679691242936,
    "sin_log_pi_3": -0.19283180319733232278,
    "sin_log_pi_4": -0.15948090281335167261,
    "sin_log_2pi_3": -0.02273259134406429048,
    "alt_harmonic": 0.69314718055994530942,
    "alt_squares": 0.82246703342411321824,
    "beta_log_1": -0.19290131679691242936,
    "chi3_log_1": -0.22266298696860150949,
    "chi3_1": 0.60459978807807261686,
    "f8_log_1": 0.023004587862736010318,
    "f6_log_1": -0.12445616121617402942,
    "beta_half": 0.66769145718960917666,
    "beta_log_half": -0.28186474831561178191,
    "odd_sin_log_pi_3": -0.10778219727069830663,
    "twisted_a_re": 0.63300762143398007405,
    "twisted_a_im": 0.28209921699416345018,
    "twisted_b_re": -1.4284846081984879802,
    "twisted_b_im": 0.43636609381945540954,
    "twisted_c_re": -0.20663886554045190926,
    "twisted_c_im": 6.4769289573354134426e-18,
}

# (theta, step, shift, s, log_power) behind the twisted_* entries
TWISTED_ARGS = {
    "twisted_a": (2.0, 1.0, 1.0, 0.5, 0),
    "twisted_b": (1.0471975511965979, 2.0, 0.5, 0.7, 1),
    "twisted_c": (3.141592653589793, 1.0, 1.0, 0.3, 1),
}
