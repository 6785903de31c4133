"""Published example sequences and LC tables used as regression references."""
from enum import Enum
from itertools import product
from typing import Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from cyclolc.sequences.cyclotomy import Variant


class ReferenceTable(str, Enum):
    """TABLE1 lists LC(s) with 2^e = -1 mod p; TABLE2 lists LC(s~) with 2^e = 1 mod p."""
    TABLE1 = "TABLE1"
    TABLE2 = "TABLE2"

    @property
    def variant(self) -> Variant:
        return Variant.STANDARD if self is ReferenceTable.TABLE1 else Variant.MODIFIED


class TableRow(BaseModel):
    """One table row; every (g, b) pair listed must give the same LC."""
    model_config = ConfigDict(frozen=True)

    table: ReferenceTable
    p: int
    m: int
    e: int
    pairs: Tuple[Tuple[int, int], ...]
    lc: int

    @property
    def f(self) -> int:
        return (self.p - 1) // self.e


class ExampleSequence(BaseModel):
    """A reference period with its parameters and LC; ``printed`` keeps a misprinted original."""
    model_config = ConfigDict(frozen=True)

    name: str
    variant: Variant
    p: int
    m: int
    f: int
    b: int
    g: int
    bits: str
    lc: int
    printed: Optional[str] = None

    @property
    def erratum(self) -> Tuple[int, ...]:
        """Indices where the printed period differs from the corrected one."""
        if self.printed is None:
            return ()
        return tuple(i for i, (x, y) in enumerate(zip(self.printed, self.bits)) if x != y)


def _grid(gs, bs) -> Tuple[Tuple[int, int], ...]:
    return tuple(product(gs, bs))


TABLE1_ROWS: List[TableRow] = [
    TableRow(table=ReferenceTable.TABLE1, p=5, m=2, e=2, pairs=_grid([3], [0, 1, 3]), lc=46),
    TableRow(table=ReferenceTable.TABLE1, p=5, m=3, e=2, pairs=_grid([3], [0, 1, 3]), lc=246),
    TableRow(table=ReferenceTable.TABLE1, p=5, m=4, e=2, pairs=_grid([3], [0, 1, 3]), lc=1246),
    TableRow(table=ReferenceTable.TABLE1, p=11, m=2, e=5, pairs=_grid([7], [2, 19]), lc=232),
    TableRow(table=ReferenceTable.TABLE1, p=13, m=2, e=6,
             pairs=_grid([7], [6, 11]) + _grid([11], [5, 12]), lc=326),
    TableRow(table=ReferenceTable.TABLE1, p=13, m=3, e=6, pairs=_grid([7, 11], [5, 12]), lc=4382),
    TableRow(table=ReferenceTable.TABLE1, p=17, m=1, e=4, pairs=_grid([3, 5], [0, 3]), lc=18),
    TableRow(table=ReferenceTable.TABLE1, p=17, m=2, e=4,
             pairs=_grid([3], [0, 2]) + _grid([5], [0, 7]), lc=562),
    TableRow(table=ReferenceTable.TABLE1, p=19, m=2, e=9,
             pairs=_grid([3], [1, 6]) + _grid([13], [3, 22]), lc=704),
]

TABLE2_ROWS: List[TableRow] = [
    TableRow(table=ReferenceTable.TABLE2, p=7, m=2, e=3, pairs=_grid([3, 5], [0, 3]), lc=89),
    TableRow(table=ReferenceTable.TABLE2, p=7, m=3, e=3, pairs=_grid([3, 5], [0, 1]), lc=677),
    TableRow(table=ReferenceTable.TABLE2, p=17, m=1, e=8, pairs=_grid([3], [0, 3]), lc=10),
    TableRow(table=ReferenceTable.TABLE2, p=17, m=2, e=8, pairs=_grid([5], [0, 3]), lc=554),
    TableRow(table=ReferenceTable.TABLE2, p=23, m=2, e=11, pairs=_grid([5, 7], [1, 5]), lc=1025),
    TableRow(table=ReferenceTable.TABLE2, p=31, m=1, e=15, pairs=_grid([3, 11], [1, 6]), lc=17),
    TableRow(table=ReferenceTable.TABLE2, p=31, m=2, e=15, pairs=_grid([3, 11], [2, 5]), lc=1877),
]


def table_rows(which: ReferenceTable) -> List[TableRow]:
    return TABLE1_ROWS if which is ReferenceTable.TABLE1 else TABLE2_ROWS


def expand(row: TableRow) -> Iterator[Tuple[int, int]]:
    """(g, b) combinations of a row."""
    yield from row.pairs


EXAMPLES: List[ExampleSequence] = [
    ExampleSequence(
        name="example-1", variant=Variant.STANDARD, p=7, m=2, f=2, b=0, g=3, lc=98,
        bits="111101110110011100100000011111101" "0001101010101010"
             "01010101010100111" "01000000111111011000110010001000",
    ),
    ExampleSequence(
        name="example-1", variant=Variant.MODIFIED, p=7, m=2, f=2, b=0, g=3, lc=89,
        bits="110111011100110110001010110101000" "0100111111111111"
             "00000000000001101" "11101010010101110010011000100010",
    ),
    ExampleSequence(
        name="example-2i", variant=Variant.STANDARD, p=5, m=2, f=2, b=0, g=3, lc=46,
        bits="11111110011010000011000100010001100000101100111111",
    ),
    ExampleSequence(
        name="example-2i", variant=Variant.MODIFIED, p=5, m=2, f=2, b=0, g=3, lc=50,
        bits="11010100110000101001101110111011001010000110010101",
        # printed copy flips bits 17 and 34; odd positions must match the standard period
        printed="11010100110000101101101110111011000010000110010101",
    ),
    ExampleSequence(
        name="example-2ii", variant=Variant.STANDARD, p=5, m=2, f=4, b=0, g=3, lc=50,
        bits="11111110111110011010001010010111010011000001000000",
    ),
    ExampleSequence(
        name="example-2ii", variant=Variant.MODIFIED, p=5, m=2, f=4, b=0, g=3, lc=50,
        bits="11010100010100110000100000111101111001101011101010",
    ),
    ExampleSequence(
        name="example-3", variant=Variant.STANDARD, p=31, m=1, f=2, b=0, g=3, lc=62,
        bits="1110110111100010101110000100100" "0110110111100010101110000100100",
    ),
    ExampleSequence(
        name="example-3", variant=Variant.MODIFIED, p=31, m=1, f=2, b=0, g=3, lc=17,
        bits="1100011101001000000100101110001" "0011100010110111111011010001110",
    ),
]
