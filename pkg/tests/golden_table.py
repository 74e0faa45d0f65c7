"""The 2014 Winter Olympics ranking as printed in the published table.

Frozen fixture: label, (gold, silver, bronze), binary rank, 7-digit decimal,
top to bottom. Transcribed independently of the bundled CSV.
"""

GOLDEN_TABLE = [
    ("Russia", (13, 11, 9), "0.11111111111110111111111110111111111", "0.9999389"),
    ("Norway", (11, 5, 10), "0.1111111111101111101111111111", "0.9997520"),
    ("Canada", (10, 10, 5), "0.111111111101111111111011111", "0.9995114"),
    ("United States", (9, 7, 12), "0.111111111011111110111111111111", "0.9990196"),
    ("Netherlands", (8, 7, 9), "0.11111111011111110111111111", "0.9980392"),
    ("Germany", (8, 6, 5), "0.111111110111111011111", "0.9980311"),
    ("Switzerland", (6, 3, 2), "0.1111110111011", "0.9915771"),
    ("Belarus", (5, 0, 1), "0.11111001", "0.9726562"),
    ("Austria", (4, 8, 5), "0.1111011111111011111", "0.9686870"),
    ("France", (4, 4, 7), "0.11110111101111111", "0.9677658"),
    ("Poland", (4, 1, 1), "0.11110101", "0.9570312"),
    ("China", (3, 4, 2), "0.11101111011", "0.9350585"),
    ("South Korea", (3, 3, 2), "0.1110111011", "0.9326171"),
    ("Sweden", (2, 7, 6), "0.11011111110111111", "0.8745040"),
    ("Czech Republic", (2, 4, 2), "0.1101111011", "0.8701171"),
    ("Slovenia", (2, 2, 4), "0.1101101111", "0.8583984"),
    ("Japan", (1, 4, 3), "0.1011110111", "0.7412109"),
    ("Finland", (1, 3, 1), "0.1011101", "0.7265625"),
    ("Great Britain", (1, 1, 2), "0.101011", "0.6718750"),
    ("Ukraine", (1, 0, 1), "0.1001", "0.5625000"),
    ("Slovakia", (1, 0, 0), "0.1", "0.5000000"),
    ("Italy", (0, 2, 6), "0.0110111111", "0.4365234"),
    ("Latvia", (0, 2, 2), "0.011011", "0.4218750"),
    ("Australia", (0, 2, 1), "0.01101", "0.4062500"),
    ("Croatia", (0, 1, 0), "0.01", "0.2500000"),
    ("Kazakhstan", (0, 0, 1), "0.001", "0.1250000"),
]
