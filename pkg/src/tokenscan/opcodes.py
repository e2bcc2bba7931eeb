"""EVM opcode tables: mnemonics and stack arities."""

from __future__ import annotations

MNEMONICS: dict[int, str] = {
    0x00: "STOP", 0x01: "ADD", 0x02: "MUL", 0x03: "SUB", 0x04: "DIV",
    0x05: "SDIV", 0x06: "MOD", 0x07: "SMOD", 0x08: "ADDMOD", 0x09: "MULMOD",
    0x0A: "EXP", 0x0B: "SIGNEXTEND",
    0x10: "LT", 0x11: "GT", 0x12: "SLT", 0x13: "SGT", 0x14: "EQ",
    0x15: "ISZERO", 0x16: "AND", 0x17: "OR", 0x18: "XOR", 0x19: "NOT",
    0x1A: "BYTE", 0x1B: "SHL", 0x1C: "SHR", 0x1D: "SAR",
    0x20: "KECCAK256",
    0x30: "ADDRESS", 0x31: "BALANCE", 0x32: "ORIGIN", 0x33: "CALLER",
    0x34: "CALLVALUE", 0x35: "CALLDATALOAD", 0x36: "CALLDATASIZE",
    0x37: "CALLDATACOPY", 0x38: "CODESIZE", 0x39: "CODECOPY", 0x3A: "GASPRICE",
    0x3B: "EXTCODESIZE", 0x3C: "EXTCODECOPY", 0x3D: "RETURNDATASIZE",
    0x3E: "RETURNDATACOPY", 0x3F: "EXTCODEHASH",
    0x40: "BLOCKHASH", 0x41: "COINBASE", 0x42: "TIMESTAMP", 0x43: "NUMBER",
    0x44: "PREVRANDAO", 0x45: "GASLIMIT", 0x46: "CHAINID", 0x47: "SELFBALANCE",
    0x48: "BASEFEE", 0x49: "BLOBHASH", 0x4A: "BLOBBASEFEE",
    0x50: "POP", 0x51: "MLOAD", 0x52: "MSTORE", 0x53: "MSTORE8",
    0x54: "SLOAD", 0x55: "SSTORE", 0x56: "JUMP", 0x57: "JUMPI",
    0x58: "PC", 0x59: "MSIZE", 0x5A: "GAS", 0x5B: "JUMPDEST",
    0x5C: "TLOAD", 0x5D: "TSTORE", 0x5E: "MCOPY", 0x5F: "PUSH0",
    0xF0: "CREATE", 0xF1: "CALL", 0xF2: "CALLCODE", 0xF3: "RETURN",
    0xF4: "DELEGATECALL", 0xF5: "CREATE2", 0xFA: "STATICCALL",
    0xFD: "REVERT", 0xFE: "INVALID", 0xFF: "SELFDESTRUCT",
}

for _n in range(1, 33):
    MNEMONICS[0x5F + _n] = f"PUSH{_n}"
for _n in range(1, 17):
    MNEMONICS[0x7F + _n] = f"DUP{_n}"
    MNEMONICS[0x8F + _n] = f"SWAP{_n}"
for _n in range(5):
    MNEMONICS[0xA0 + _n] = f"LOG{_n}"

MNEMONIC_TO_OPCODE: dict[str, int] = {name: op for op, name in MNEMONICS.items()}

# (pops, pushes) for every assigned opcode. DUP/SWAP are modeled with the
# full window they touch; terminal instructions list what they consume.
STACK_ARITY: dict[int, tuple[int, int]] = {
    0x00: (0, 0),
    0x01: (2, 1), 0x02: (2, 1), 0x03: (2, 1), 0x04: (2, 1), 0x05: (2, 1),
    0x06: (2, 1), 0x07: (2, 1), 0x08: (3, 1), 0x09: (3, 1), 0x0A: (2, 1),
    0x0B: (2, 1),
    0x10: (2, 1), 0x11: (2, 1), 0x12: (2, 1), 0x13: (2, 1), 0x14: (2, 1),
    0x15: (1, 1), 0x16: (2, 1), 0x17: (2, 1), 0x18: (2, 1), 0x19: (1, 1),
    0x1A: (2, 1), 0x1B: (2, 1), 0x1C: (2, 1), 0x1D: (2, 1),
    0x20: (2, 1),
    0x30: (0, 1), 0x31: (1, 1), 0x32: (0, 1), 0x33: (0, 1), 0x34: (0, 1),
    0x35: (1, 1), 0x36: (0, 1), 0x37: (3, 0), 0x38: (0, 1), 0x39: (3, 0),
    0x3A: (0, 1), 0x3B: (1, 1), 0x3C: (4, 0), 0x3D: (0, 1), 0x3E: (3, 0),
    0x3F: (1, 1),
    0x40: (1, 1), 0x41: (0, 1), 0x42: (0, 1), 0x43: (0, 1), 0x44: (0, 1),
    0x45: (0, 1), 0x46: (0, 1), 0x47: (0, 1), 0x48: (0, 1), 0x49: (1, 1),
    0x4A: (0, 1),
    0x50: (1, 0), 0x51: (1, 1), 0x52: (2, 0), 0x53: (2, 0), 0x54: (1, 1),
    0x55: (2, 0), 0x56: (1, 0), 0x57: (2, 0), 0x58: (0, 1), 0x59: (0, 1),
    0x5A: (0, 1), 0x5B: (0, 0), 0x5C: (1, 1), 0x5D: (2, 0), 0x5E: (3, 0),
    0xF0: (3, 1), 0xF1: (7, 1), 0xF2: (7, 1), 0xF3: (2, 0), 0xF4: (6, 1),
    0xF5: (4, 1), 0xFA: (6, 1), 0xFD: (2, 0), 0xFE: (0, 0), 0xFF: (1, 0),
}

for _n in range(0, 33):
    STACK_ARITY[0x5F + _n] = (0, 1)
for _n in range(1, 17):
    STACK_ARITY[0x7F + _n] = (_n, _n + 1)
    STACK_ARITY[0x8F + _n] = (_n + 1, _n + 1)
for _n in range(5):
    STACK_ARITY[0xA0 + _n] = (_n + 2, 0)

PUSH1, PUSH32 = 0x60, 0x7F
PUSH0 = 0x5F

CALL_FAMILY: frozenset[int] = frozenset({0xF1, 0xF2, 0xF4, 0xFA})

TERMINALS: frozenset[int] = frozenset({0x00, 0xF3, 0xFD, 0xFE, 0xFF})


def push_data_length(opcode: int) -> int:
    """Immediate length in bytes; 0 for anything that is not PUSH1..PUSH32."""
    if PUSH1 <= opcode <= PUSH32:
        return opcode - PUSH0
    return 0
