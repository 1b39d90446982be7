from .base import (
    CertificateMap,
    IndepSetCertificate,
    PendantPairCertificate,
    certificate_from_data,
    read_certificates,
    write_certificates,
)
from .lemmas import (
    cactus_hypothesis,
    check_indep_certificate,
    check_pendant_certificate,
    find_indep_certificate,
    prove_strongly_nonstackable,
    validate_certificate,
)
from .classification import BipartiteClass, classify_complete_bipartite
