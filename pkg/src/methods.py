"""Method variants and disambiguation fallback policies."""

from enum import StrEnum


class Method(StrEnum):
    """The four extraction methods compared by the evaluation suite."""

    ST = "ST"
    MWT = "MWT"
    ST_AUG = "ST+Aug+DisAmbig"
    MWT_AUG = "MWT+Aug+DisAmbig"

    @property
    def tokenizer(self) -> str:
        """Tokenizer front-end, ``st`` or ``mwt``."""
        return "st" if self in (Method.ST, Method.ST_AUG) else "mwt"

    @property
    def augmented(self) -> bool:
        """Whether the method joins every token against the gazetteer."""
        return self in (Method.ST_AUG, Method.MWT_AUG)


class Fallback(StrEnum):
    """What to do with tokens the locality window leaves unresolved."""

    POPULATION = "population"
    FIRST = "first"
    NONE = "none"


ALL_METHODS: tuple[Method, ...] = (
    Method.ST,
    Method.MWT,
    Method.ST_AUG,
    Method.MWT_AUG,
)
