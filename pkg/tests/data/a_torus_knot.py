TEXT = 's1 s2 s1 s2'
STRANDS = 3
SL = 1
H1_FACTORS = {2: (3,), 3: (2, 2)}
