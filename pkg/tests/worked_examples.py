"""Worked examples in expanded N-Triples form (prefixed names expanded)."""

EX = "http://www.example.org/"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
ZEX = "http://example.org/"
ZOO = "http://example.org/zoo#"

STAFF = f"{EX}staffid/85740"
DESIG = f"{EX}terms/desig"

SS_PP_T1 = f"<{EX}staffid/85740> <{EX}terms/desig> <{EX}dept/accountant> .\n"
SS_PP_T2 = f"<{EX}staffid/85740> <{EX}terms/desig> <{EX}club/treasurer> .\n"

OO_PP_T1 = f'<{EX}staffid/85740> "published" <http://www.wikipedia.com/technology/C.V> .\n'
OO_PP_T2 = f'<{EX}staffid/85742> "published" <http://www.wikipedia.com/technology/C.V> .\n'

SP_T1 = SS_PP_T1
SP_T2 = f"<{EX}terms/desig> <{EX}staffid/85740> <{EX}club/treasurer> .\n"

ADDRESS_T1 = f"""\
<{EX}staffid/85740> <{EX}terms/address> _:addressid .
_:addressid <{EX}terms/street> "1501 Grant Avenue" .
_:addressid <{EX}terms/city> "Bedford" .
_:addressid <{EX}terms/state> "Massachusetts" .
_:addressid <{EX}terms/postalCode> "01730" .
"""
ADDRESS_T2 = f"<{EX}staffid/85740> <{EX}terms/design> <{EX}dept/accountant> .\n"

ZOO_TRIPLES = [
    f"<{ZEX}Lion> <{RDF}type> <{ZEX}animal> .\n",
    f"<{ZEX}Tiger> <{RDF}type> <{ZEX}cat> .\n",
    f"<{ZOO}exhibit> <{RDFS}range> <{ZEX}animal> .\n",
    f"<{ZEX}zoo1> <{ZOO}exhibit> <{ZEX}Tiger> .\n",
]
CAT_SUBCLASS = f"<{ZEX}cat> <{RDFS}subClassOf> <{ZEX}animal> .\n"
