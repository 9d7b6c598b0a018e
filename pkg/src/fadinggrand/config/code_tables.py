"""
Code Construction Tables

Fixed polynomial tables used when building codes, so that every construction is
reproducible across runs and machines.

Polynomials are stored as Python integers: bit i holds the coefficient of x^i.
For example 0b10011 (0x13) is x^4 + x + 1.

Table Sources:
- Primitive polynomials: one canonical choice per GF(2^m), as tabulated in the standard
  coding-theory references (Lin & Costello, Appendix B).
- CRC polynomials: 3GPP NR generator polynomials used by CA-Polar codes.
"""

# ================================
# Primitive polynomials for GF(2^m), m = 3..16
# ================================
PRIMITIVE_POLYNOMIALS = {
    3: 0b1011,                  # x^3 + x + 1
    4: 0b10011,                 # x^4 + x + 1
    5: 0b100101,                # x^5 + x^2 + 1
    6: 0b1000011,               # x^6 + x + 1
    7: 0b10001001,              # x^7 + x^3 + 1
    8: 0b100011101,             # x^8 + x^4 + x^3 + x^2 + 1
    9: 0b1000010001,            # x^9 + x^4 + 1
    10: 0b10000001001,          # x^10 + x^3 + 1
    11: 0b100000000101,         # x^11 + x^2 + 1
    12: 0b1000001010011,        # x^12 + x^6 + x^4 + x + 1
    13: 0b10000000011011,       # x^13 + x^4 + x^3 + x + 1
    14: 0b100010001000011,      # x^14 + x^10 + x^6 + x + 1
    15: 0b1000000000000011,     # x^15 + x + 1
    16: 0b10001000000001011,    # x^16 + x^12 + x^3 + x + 1
}

# ================================
# CRC generator polynomials (leading term included)
# ================================
CRC_POLYNOMIALS = {
    'crc6': 0b1100001,              # x^6 + x^5 + 1
    'crc11': 0b111000100001,        # x^11 + x^10 + x^9 + x^5 + 1
    'crc16': 0b10001000000100001,   # x^16 + x^12 + x^5 + 1
}

DEFAULT_CRC = 'crc11'

# ================================
# Helper Functions
# ================================

def poly_degree(poly):
    """Degree of a GF(2) polynomial stored as an int (-1 for the zero polynomial)."""
    return poly.bit_length() - 1


def get_primitive_polynomial(m):
    """
    Get the primitive polynomial used for GF(2^m).

    Args:
        m: Field degree

    Returns:
        int: Polynomial with bit i = coefficient of x^i

    Raises:
        KeyError: if no polynomial is tabulated for m
    """
    return PRIMITIVE_POLYNOMIALS[m]


def validate_tables():
    """
    Check the structural invariants of the tables.

    Returns:
        dict: Validation results
    """
    bad_degree = [m for m, poly in PRIMITIVE_POLYNOMIALS.items() if poly_degree(poly) != m]
    even_constant = [m for m, poly in PRIMITIVE_POLYNOMIALS.items() if not poly & 1]
    bad_crc = [name for name, poly in CRC_POLYNOMIALS.items() if not poly & 1]

    return {
        'field_degrees': sorted(PRIMITIVE_POLYNOMIALS),
        'bad_degree': bad_degree,
        'missing_constant_term': even_constant,
        'bad_crc': bad_crc,
        'valid': not (bad_degree or even_constant or bad_crc),
    }


if __name__ == "__main__":
    print("Code Table Validation")
    print("=" * 50)

    validation = validate_tables()
    print(f"Field degrees: {validation['field_degrees']}")
    print(f"CRC polynomials: {sorted(CRC_POLYNOMIALS)}")
    print(f"Valid: {validation['valid']}")
