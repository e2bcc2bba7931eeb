"""Linear EVM bytecode disassembly.

Decoding is total: unknown opcodes become INVALID-class instructions and a
PUSH whose immediate runs past the end of code is zero-padded, mirroring the
EVM's read-past-end semantics. Failure policy belongs to the analyzers, not
the decoder.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from pathlib import Path

from .keccak import keccak256
from .opcodes import CALL_FAMILY, MNEMONICS, push_data_length


@dataclass(frozen=True)
class Instruction:
    """One decoded instruction: offset, opcode byte, name, PUSH immediate."""

    offset: int
    opcode: int
    mnemonic: str
    immediate: bytes = b""

    @property
    def size(self) -> int:
        return 1 + len(self.immediate)

    @property
    def is_push(self) -> bool:
        return 0x5F <= self.opcode <= 0x7F

    @property
    def is_invalid_class(self) -> bool:
        """True for INVALID proper and for unassigned opcodes."""
        return self.opcode == 0xFE or self.opcode not in MNEMONICS

    def __str__(self) -> str:
        if self.immediate:
            return f"{self.offset}: {self.mnemonic} 0x{self.immediate.hex()}"
        return f"{self.offset}: {self.mnemonic}"


@dataclass(frozen=True)
class Program:
    """A decoded bytecode instance, keyed by the Keccak-256 of its raw bytes."""

    raw: bytes
    instructions: tuple[Instruction, ...]
    code_hash: bytes

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "_by_offset", {ins.offset: ins for ins in self.instructions}
        )
        object.__setattr__(
            self,
            "jumpdests",
            frozenset(i.offset for i in self.instructions if i.opcode == 0x5B),
        )

    def instruction_at(self, offset: int) -> Instruction | None:
        return self._by_offset.get(offset)  # type: ignore[attr-defined]

    def __len__(self) -> int:
        return len(self.instructions)


def disassemble(raw: bytes) -> Program:
    """Decode ``raw`` linearly from offset 0. Total: never raises."""
    instructions = []
    offset = 0
    n = len(raw)
    while offset < n:
        opcode = raw[offset]
        mnemonic = MNEMONICS.get(opcode)
        if mnemonic is None:
            mnemonic = f"UNKNOWN_{opcode:02x}"
        data_len = push_data_length(opcode)
        immediate = raw[offset + 1:offset + 1 + data_len]
        if len(immediate) < data_len:
            immediate = immediate + b"\x00" * (data_len - len(immediate))
        instructions.append(Instruction(offset, opcode, mnemonic, immediate))
        offset += 1 + data_len
    return Program(raw=raw, instructions=tuple(instructions), code_hash=keccak256(raw))


def is_call_family(instruction: Instruction) -> bool:
    """True exactly for CALL, CALLCODE, DELEGATECALL and STATICCALL."""
    return instruction.opcode in CALL_FAMILY


def format_program(program: Program) -> str:
    """One line per instruction: ``<offset>: <MNEMONIC> <0x-immediate>``."""
    return "\n".join(str(ins) for ins in program.instructions)


_HEX_DIGITS = set(string.hexdigits)


def parse_hex(text: str) -> bytes:
    """Parse a hex string with optional 0x prefix; raises ValueError."""
    cleaned = text.strip()
    if cleaned[:2].lower() == "0x":
        cleaned = cleaned[2:]
    if len(cleaned) % 2 != 0:
        raise ValueError("odd-length hex string")
    if not set(cleaned) <= _HEX_DIGITS:
        raise ValueError("non-hex characters in bytecode string")
    return bytes.fromhex(cleaned)


def load_bytecode(path: str | Path) -> bytes:
    """Read bytecode from a file holding either hex text or raw bytes."""
    blob = Path(path).read_bytes()
    try:
        return parse_hex(blob.decode("ascii"))
    except (UnicodeDecodeError, ValueError):
        return blob
