# Benchmark profile
# Desk-scale defaults for the bench command; a non-zero SCALE argument overrides them

# ================ Successor Cost ================
# Number of consecutive successors measured, starting from zero
SUCC_AVG_RANGE = 1 << 20

# Expected average succ/pred calls per successor at this range
SUCC_AVG_BAND = (2.1, 2.35)

# ================ Tower Arithmetic ================
# Heights k of the best-case towers best(k) added and multiplied.
# A non-zero SCALE n runs heights (n, n + 10)
TOWER_ADD_HEIGHTS = (20, 30)
TOWER_MUL_HEIGHTS = (30, 40)

# ================ Tree vs Int Timing ================
# Bits of the random dense operands
VS_ORACLE_DENSE_BITS = 2048

# Height of the larger tower-shaped operand; the smaller one is one level lower
VS_ORACLE_TOWER_HEIGHT = 4

# Each timing keeps the fastest of this many runs
VS_ORACLE_REPEAT = 3

# ================ Randomness ================
BENCH_SEED = 7
