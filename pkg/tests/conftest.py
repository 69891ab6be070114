import pytest

from rdflink.ntriples import parse_document

# Three statements about one subject: two creator values and a publisher.
DOC_CREATORS = """\
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> "Dave Beckett" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> "Art Barstow" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/publisher> <http://www.w3.org/> .
"""

# Same subject and predicate, different objects (a person's two designations).
PAIR_SHARED_SUBJECT_PRED = (
    "<http://www.example.org/staffid/85740> <http://www.example.org/terms/desig> <http://www.example.org/dept/accountant> .\n",
    "<http://www.example.org/staffid/85740> <http://www.example.org/terms/desig> <http://www.example.org/club/treasurer> .\n",
)

# Different subjects, same predicate and object (two people published one page).
PAIR_SHARED_OBJECT_PRED = (
    "<http://www.example.org/staffid/85740> <http://www.example.org/terms/published> <http://www.wikipedia.com/technology/C.V> .\n",
    "<http://www.example.org/staffid/85742> <http://www.example.org/terms/published> <http://www.wikipedia.com/technology/C.V> .\n",
)

# Each graph's subject occurs as the other's predicate.
PAIR_SUBJECT_AS_PREDICATE = (
    "<http://www.example.org/staffid/85740> <http://www.example.org/terms/desig> <http://www.example.org/dept/accountant> .\n",
    "<http://www.example.org/terms/desig> <http://www.example.org/staffid/85740> <http://www.example.org/club/treasurer> .\n",
)

# An anonymous friend: the blank node couples the two statements.
DOC_ANON_FRIEND = """\
<http://people.test/John> <http://people.test/knows> _:p1 .
_:p1 <http://people.test/bornOn> "21st of April" .
"""


@pytest.fixture
def creators_graph():
    return parse_document(DOC_CREATORS)


@pytest.fixture
def shared_subject_pred_pair():
    a, b = PAIR_SHARED_SUBJECT_PRED
    return parse_document(a), parse_document(b)


@pytest.fixture
def shared_object_pred_pair():
    a, b = PAIR_SHARED_OBJECT_PRED
    return parse_document(a), parse_document(b)


@pytest.fixture
def subject_as_predicate_pair():
    a, b = PAIR_SUBJECT_AS_PREDICATE
    return parse_document(a), parse_document(b)
