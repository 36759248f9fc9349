from enum import Enum


class TDType(Enum):
    I = "I"
    II = "II"
    III_PLUS = "III+"
    III_MINUS = "III-"
    IV = "IV"

    @classmethod
    def parse(cls, text: str) -> "TDType":
        s = text.strip().replace("−", "-").replace("⁺", "+").replace("⁻", "-")
        for t in cls:
            if t.value == s:
                return t
        raise ValueError(f"unknown type {text!r}; expected one of I, II, III+, III-, IV")

    @property
    def is_III(self) -> bool:
        return self in (TDType.III_PLUS, TDType.III_MINUS)

    def __str__(self):
        return self.value
