MAX_POINTS_ENV_VARIABLE = "GENUSONE_MAX_POINTS"
VERIFY_SEED_ENV_VARIABLE = "GENUSONE_VERIFY_SEED"
MAX_TORSION_MODULUS_ENV_VARIABLE = "GENUSONE_MAX_TORSION_MODULUS"
LOG_LEVEL_ENV_VARIABLE = "GENUSONE_LOG_LEVEL"

DEFAULT_MAX_POINTS = 24
DEFAULT_VERIFY_SEED = 1729
DEFAULT_MAX_TORSION_MODULUS = 1000
DEFAULT_LOG_LEVEL = "WARNING"

LAMBDA_SYMBOL = "λ"
DELTA_SYMBOL = "δ"
SYM_DELTA_SYMBOL = "δ̃"
MINUS_SIGN = "−"

SYM_NORMALIZATION = "a_irr = (lambda coefficient)/12, so 12λ maps to δ̃_irr with coefficient 1"
BOUNDARY_EXEMPTION_CAVEAT = (
    "the moving-curve constraints bind irreducible effective divisors other than the boundary "
    "divisors; a boundary divisor may fail them and stays effective"
)
