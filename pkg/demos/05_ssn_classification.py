"""SN / SSN / NCN predicates: brute force versus structure theory.

SN asks that for every normal N and subgroup Y, either N <= Y or YN is
normal; SSN asks it of every subgroup. The structural route classifies SSN
groups into abelian, Hamiltonian, NCN p-groups, two semidirect families,
and A5 - and must agree with the exhaustive check.
"""

from qgring import build_named, classify_ssn, is_ncn, is_sn, is_ssn

names = ["S3", "Q8", "D12", "C2xD8", "D8cpD8", "D8cpQ8", "Q16",
         "A4", "C5rC4", "C3rC8", "C3C3rC8", "Ex38K", "Ex37G1", "A5"]

print(f"{'group':<10} {'sn':<6} {'ssn':<6} classification")
for name in names:
    G = build_named(name)
    sn, ssn = is_sn(G), is_ssn(G)
    cls = classify_ssn(G)
    assert ssn == cls.ssn
    print(f"{name:<10} {str(sn):<6} {str(ssn):<6} {cls.tag} {cls.params}")

print("\nNCN = SSN for p-groups:")
for name in ["D8", "Q16", "D8cpD8", "D8cpQ8", "BJ5", "BJ8", "BJ9"]:
    G = build_named(name)
    print(f"  {name:<8} ncn={is_ncn(G)} ssn={is_ssn(G)}")
    assert is_ncn(G) == is_ssn(G)
