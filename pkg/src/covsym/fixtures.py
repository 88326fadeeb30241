"""Published H_n tables for n = 1..10.

Transcribed term by term in the published order. Grouped powers are written
out letter by letter: (q2q3)^2 -> q2q3q2q3, (q3q2)^2 -> q3q2q3q2.
"""
from __future__ import annotations

from .qpoly import QPoly

H_TABLE_TEXT: dict[int, str] = {
    1: "0",
    2: "1/3 q2",
    3: "1/2 q3",
    4: "7/15 q2^2 + 3/5 q4",
    5: "2/3 q5 + q3q2 + 4/3 q2q3",
    6: "5/7 q6 + 11/7 q4q2 + 25/7 q3^2 + 18/7 q2q4 + 31/21 q2^3",
    7: ("3/4 q7 + 13/6 q5q2 + 27/4 q4q3 + 33/4 q3q4 + 25/6 q2q5 + 17/4 q3q2^2"
        " + 31/6 q2q3q2 + 73/12 q2^2q3"),
    8: ("160/9 q3^2q2 + 140/9 q3q5 + 182/9 q3q2q3 + 43/5 q4q2^2 + 106/9 q2q4q2"
        " + 226/9 q2q3^2 + 239/15 q2^2q4 + 127/15 q2^4 + 55/9 q2q6 + 7/9 q8"
        " + 25/9 q6q2 + 98/9 q5q3 + 91/5 q4^2"),
    9: ("4/5 q9 + 17/5 q7q2 + 168/5 q5q4 + 196/5 q4q5 + 209/5 q4q3q2 + 232/5 q4q2q3"
        " + 74/5 q5q2^2 + 47 q3q4q2 + 26 q3q6 + 60 q3q2q4 + 31 q3q2^3 + 98 q3^3"
        " + 168/5 q2^2q5 + 226/5 q2^3q3 + 42/5 q2q7 + 184/5 q2q3q2^2 + 378/5 q2q3q4"
        " + 66 q2q4q3 + 22 q2q5q2 + 197/5 q2^2q3q2 + 16 q6q3"),
    10: ("9/11 q10 + 982/11 q5q2q3 + 2702/33 q5q3q2 + 763/33 q6q2^2 + 896/11 q5^2"
         " + 612/11 q6q4 + 243/11 q7q3 + 133/33 q8q2 + 4610/33 q2q5q3"
         " + 1205/33 q2q6q2 + 3358/33 q2q4q2^2 + 2472/11 q2q4^2 + 364/33 q2q8"
         " + 441/11 q3q7 + 810/11 q4q6 + 7262/33 q2q3q2q3 + 6494/33 q2q3^2q2"
         " + 5936/33 q2q3q5 + 3240/11 q3q4q3 + 3290/33 q3q5q2 + 3627/11 q3^2q4"
         " + 5173/33 q3^2q2^2 + 1554/11 q3q2q5 + 5348/33 q3q2q3q2 + 2028/11 q3q2^2q3"
         " + 7945/33 q2^2q3^2 + 2835/11 q4q3^2 + 2050/33 q2^2q6 + 3787/33 q2^2q4q2"
         " + 1383/11 q4^2q2 + 1636/11 q2^3q4 + 1692/11 q4q2q4 + 2555/33 q2^5"
         " + 855/11 q4q2^3"),
}

# Low-order linear-in-w terms of the Taylor series of h(v, w): H_n / n!.
TAYLOR_LINEAR_TEXT: dict[int, str] = {
    2: "1/6 q2",
    3: "1/12 q3",
}


def load_fixtures() -> dict[int, QPoly]:
    return {n: QPoly.parse(text) for n, text in H_TABLE_TEXT.items()}
