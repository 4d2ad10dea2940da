"""Type G2: the weight sets X_n, the generators e_a, f_a, t and the formula corpora."""
from .appendix_a import appendix_A_suite
from .appendix_b import appendix_B_suite
from .appendix_c import appendix_C_suite, generation_rank
from .generators import gen_e, gen_f, gen_t, gen_t_standard, schur_n
from .report import FormulaCheck, SuiteReport
from .weights import act_delta, build_Xn, delta, eps_label, eps_orbit, g2_group, index_of

__all__ = [
    "appendix_A_suite",
    "appendix_B_suite",
    "appendix_C_suite",
    "generation_rank",
    "gen_e",
    "gen_f",
    "gen_t",
    "gen_t_standard",
    "schur_n",
    "FormulaCheck",
    "SuiteReport",
    "act_delta",
    "build_Xn",
    "delta",
    "eps_label",
    "eps_orbit",
    "g2_group",
    "index_of",
]
