#!/usr/bin/env python3
"""Regenerates data/thomforge_db.txt with a fresh content hash."""
import pathlib

RECORDS = """\
# Exact Thom polynomials, equidimensional case (kappa = 0).
A1   | 0 | tp_source | 1 | 1 | 1 | 1 | localization tables (conjectural closed form) | c1
A2   | 0 | tp_source | 2 | 1 | 1 | 2 | localization tables (conjectural closed form) | c1^2 + c2
A1^2 | 0 | tp_source | 2 | 2 | 2 | 2 | localization tables (conjectural closed form) | c1 s[1] - 4 c1^2 - 2 c2
A3   | 0 | tp_source | 3 | 1 | 1 | 3 | localization tables (conjectural closed form) | c1^3 + 3 c1 c2 + 2 c3
A1^3 | 0 | tp_source | 3 | 3 | 6 | 3 | localization tables (conjectural closed form) | 1/2 ( c1 s[1]^2 - 4 c2 s[1] - 4 c1 s[2] - 2 c1 s[0,1] - 8 c1^2 s[1] + 40 c1^3 + 56 c1 c2 + 24 c3 )
A1A2 | 0 | tp_source | 3 | 1 | 1 | 3 | localization tables (conjectural closed form) | c1 s[2] + c1 s[0,1] - 6 c1^3 - 12 c1 c2 - 6 c3
A2A1 | 0 | tp_source | 3 | 1 | 1 | 3 | localization tables (conjectural closed form) | c1^2 s[1] + c2 s[1] - 6 c1^3 - 12 c1 c2 - 6 c3
I22  | 0 | tp_source | 4 | 1 | 1 | 4 | restriction method | c2^2 - c1 c3

# Exact Thom polynomials, one-dimension-up case (kappa = 1).
A0^2 | 1 | tp_source | 1 | 2 | 2  | 1 | localization tables (conjectural closed form) | s[] - c1
A1   | 1 | tp_source | 2 | 1 | 1  | 2 | localization tables (conjectural closed form) | c2
A0^3 | 1 | tp_source | 2 | 3 | 6  | 2 | localization tables (conjectural closed form) | 1/2 ( s[]^2 - s[1] - 2 s[] c1 + 2 c1^2 + 2 c2 )
A0A1 | 1 | tp_source | 3 | 1 | 1  | 3 | localization tables (conjectural closed form) | s[0,1] - 2 c1 c2 - 2 c3
A1A0 | 1 | tp_source | 3 | 1 | 1  | 3 | localization tables (conjectural closed form) | s[] c2 - 2 c1 c2 - 2 c3
A0^4 | 1 | tp_source | 3 | 1 | 24 | 3 | localization tables (published counting normalization: class integral over prod w, no covering division) | 1/6 ( s[]^3 - 3 s[] s[1] + 2 s[2] + 2 s[0,1] - 3 s[]^2 c1 + 3 s[1] c1 + 6 s[] c1^2 + 6 s[] c2 - 6 c1^3 - 18 c1 c2 - 12 c3 )

# Segre-MacPherson series of closures, kappa = 0, correct through degree 4.
A1  | 0 | tpsm_closure | 1 | 1 | 1 | 4 | restriction method | c1 - c1^2 + c1^3 - c1^4 + c2^2 - c1 c3
A2  | 0 | tpsm_closure | 2 | 1 | 1 | 4 | restriction method | c1^2 + c2 - 2 c1^3 - 3 c1 c2 - c3 + 3 c1^4 + 6 c1^2 c2 - 2 c2^2 + 6 c1 c3 + c4
A3  | 0 | tpsm_closure | 3 | 1 | 1 | 4 | restriction method | c1^3 + 3 c1 c2 + 2 c3 - 3 c1^4 - 12 c1^2 c2 - c2^2 - 14 c1 c3 - 6 c4
A4  | 0 | tpsm_closure | 4 | 1 | 1 | 4 | restriction method | c1^4 + 6 c1^2 c2 + 2 c2^2 + 9 c1 c3 + 6 c4
I22 | 0 | tpsm_closure | 4 | 1 | 1 | 4 | restriction method | c2^2 - c1 c3

# Segre-MacPherson series of closures, kappa = 1, correct through degree 3.
A0^2 | 1 | tpsm_closure | 1 | 2 | 2  | 3 | restriction method | s[] - c1 + 1/2 ( 2 c2 + 2 c1 s[] - s[]^2 - s[1] ) + 1/6 ( 12 c1 c2 - 3 c1 s[]^2 - 3 c1 s[1] - 6 c2 s[] + 6 c3 + s[]^3 + 3 s[] s[1] - 7 s[0,1] + 2 s[2] )
A0^3 | 1 | tpsm_closure | 2 | 3 | 6  | 3 | restriction method | 1/2 ( 2 c1^2 - 2 c1 s[] + 2 c2 + s[]^2 - s[1] ) + 1/6 ( -6 c1^2 s[] - 18 c1 c2 + 6 c1 s[]^2 - 18 c3 - 2 s[]^3 + 5 s[0,1] + 2 s[2] )
A1   | 1 | tpsm_closure | 2 | 1 | 1  | 3 | restriction method | c2 - c1 c2 - c3
A0^4 | 1 | tpsm_closure | 3 | 4 | 24 | 3 | restriction method | 1/6 ( -6 c1^3 + 6 c1^2 s[] - 18 c1 c2 - 3 c1 s[]^2 + 3 c1 s[1] + 6 c2 s[] - 12 c3 + s[]^3 - 3 s[] s[1] + 2 s[0,1] + 2 s[2] )
A0A1 | 1 | tpsm_closure | 3 | 1 | 1  | 3 | restriction method | s[0,1] - 2 c1 c2 - 2 c3
A1A0 | 1 | tpsm_closure | 3 | 1 | 1  | 3 | restriction method | s[] c2 - 2 c1 c2 - 2 c3

# Image-side series (kappa = 1).
alpha_image  | 1 | tpsm_alpha_image  | 0 | 1 | 1 | 3 | combination of closure series | 1 + 1/2 ( c1 - s[] ) + 1/6 ( s[]^2 + 2 s[1] - 2 c1 s[] - c1^2 - c2 ) + 1/24 ( 2 c1^3 - 10 c1 c2 + 2 c1^2 s[] + 2 c2 s[] + 3 c1 s[]^2 - s[]^3 + 14 s[0,1] + 5 c1 s[1] - 5 s[] s[1] - 6 s[2] )
alpha_image2 | 1 | tpsm_alpha_image2 | 1 | 1 | 1 | 3 | combination of closure series | 1/2 ( s[] - c1 ) + 1/6 ( -c1^2 + 5 c2 + 4 c1 s[] - 2 s[]^2 - s[1] ) + 1/24 ( 2 c1^3 + 38 c1 c2 + 24 c3 + 2 c1^2 s[] - 22 c2 s[] - 9 c1 s[]^2 + 3 s[]^3 - 14 s[0,1] - 7 c1 s[1] + 7 s[] s[1] + 2 s[2] )
target_image | 1 | tpsm_target_image | 1 | 1 | 1 | 4 | pushforward of the source image series | s[] - 1/2 ( s[]^2 + s[1] ) + 1/6 ( s[]^3 - 7 s[0,1] + 3 s[] s[1] + 2 s[2] ) - 1/24 ( s[]^4 + 6 s[]^2 s[1] - 28 s[] s[0,1] + 8 s[] s[2] + 24 s[0,0,1] + 3 s[1]^2 - 30 s[1,1] + 6 s[3] )

# Discriminant-side series (kappa = 0).
alpha_dis  | 0 | tpsm_alpha_dis  | 1 | 1 | 1 | 3 | combination of closure series | c1 + 1/6 ( 6 c1^2 + 6 c2 - 3 c1 s[1] ) + 1/6 ( c1^3 + 11 c1 c2 + 6 c3 - 2 c1 s[0,1] - 5 c1^2 s[1] - 4 c2 s[1] + c1 s[1]^2 + 2 c1 s[2] )
target_dis | 0 | tpsm_target_dis | 1 | 1 | 1 | 3 | pushforward of the source discriminant series | s[1] + s[0,1] - 1/2 s[1]^2 + s[0,0,1] - s[0,1] s[1] + 1/6 s[1]^3 - 1/6 s[1,1] + 1/6 s[3]

# A-classification Thom polynomials for surfaces in 3-space (source and target
# Chern classes, m = n = 2).
lips  | 0 | tpA | 3 | 1 | 1 | 3 | classification of map-germs of the plane | -2 c1^3 + 5 c1^2 c'1 - 4 c1 c'1^2 - c1 c2 + c2 c'1 + c'1^3
gulls | 0 | tpA | 4 | 1 | 1 | 4 | classification of map-germs of the plane | 6 c1^4 - c1^2 c2 - 4 c2^2 - 17 c1^3 c'1 + 4 c1 c2 c'1 + 17 c1^2 c'1^2 - 3 c2 c'1^2 - 7 c1 c'1^3 + c'1^4 + 2 c1^2 c'2 + 6 c2 c'2 - 4 c1 c'1 c'2 + 2 c'1^2 c'2 - 2 c'2^2
goose | 0 | tpA | 4 | 1 | 1 | 4 | classification of map-germs of the plane | 2 c1^4 + 5 c1^2 c2 + 4 c2^2 - 7 c1^3 c'1 - 10 c1 c2 c'1 + 9 c1^2 c'1^2 + 5 c2 c'1^2 - 5 c1 c'1^3 + c'1^4 - 2 c1^2 c'2 - 6 c2 c'2 + 4 c1 c'1 c'2 - 2 c'1^2 c'2 + 2 c'2^2

# Constructible-function coefficient vectors over closure classes.
alpha_image  | 1 | coefvec | 0 | 1 | 1 | 3 | image multiplicity expansion | 1 - 1/2 A0^2 - 1/6 A0^3 + 1/2 A1 - 1/12 A0^4 + 1/6 A0A1 - 1/3 A1A0
alpha_image2 | 1 | coefvec | 1 | 1 | 1 | 3 | double-point-image multiplicity expansion | 1/2 A0^2 - 1/6 A0^3 + 1/2 A1 - 1/12 A0^4 + 1/6 A0A1 - 1/3 A1A0
alpha_dis    | 0 | coefvec | 1 | 1 | 1 | 3 | discriminant multiplicity expansion | A1 - 1/2 A1^2 - 1/6 A1^3 + 1/2 A3
"""


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h = ((h ^ b) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def main() -> None:
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "thomforge_db.txt"
    body = RECORDS
    header = f"# thomforge-db v1 fnv1a:{fnv1a64(body.encode()):016x}\n"
    out.write_text(header + body)
    print(f"wrote {out} ({len(body)} body bytes)")


if __name__ == "__main__":
    main()
