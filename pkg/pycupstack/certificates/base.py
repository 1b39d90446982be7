# BSD 3 - Clause License

# Copyright(c) 2026, The pycupstack authors
# All rights reserved.

# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:

# 1. Redistributions of source code must retain the above copyright notice, this
# list of conditions and the following disclaimer.

# 2. Redistributions in binary form must reproduce the above copyright notice,
# this list of conditions and the following disclaimer in the documentation
# and / or other materials provided with the distribution.

# 3. Neither the name of the copyright holder nor the names of its
# contributors may be used to endorse or promote products derived from
# this software without specific prior written permission.

# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES(INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
#         SERVICES
#         LOSS OF USE, DATA, OR PROFITS
#         OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT(INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.


import json
import logging
import os

from ..exceptions import FormatError

logger = logging.getLogger(__name__)


class IndepSetCertificate(object):
    """An independent set too large for every cup on it to reach the target

    With U independent, U' the vertices of U at distance at least 2 from the target,
    W the other vertices and e the eccentricity of the target, the target cannot be
    stacked onto when |U'| > (e - 1)|W|.

    :var target: The target
    :var u_set: The independent set U, sorted
    :var u_prime_size: |U'|
    :var w_size: |W|
    :var ecc: Eccentricity of the target
    """

    kind = "indep-set"

    def __init__(self, target, u_set, u_prime_size, w_size, ecc):
        self.target = target
        self.u_set = tuple(sorted(u_set))
        self.u_prime_size = u_prime_size
        self.w_size = w_size
        self.ecc = ecc

    def to_data(self):
        return {
            "kind": self.kind,
            "target": self.target,
            "u_set": list(self.u_set),
            "u_prime_size": self.u_prime_size,
            "w_size": self.w_size,
            "ecc": self.ecc,
        }

    def __eq__(self, other):
        return isinstance(other, IndepSetCertificate) and self.to_data() == other.to_data()

    def __repr__(self):
        return "<IndepSetCertificate target={} |U'|={} |W|={} ecc={}>".format(
            self.target, self.u_prime_size, self.w_size, self.ecc
        )


class PendantPairCertificate(object):
    """Two leaves on a common neighbour, both at distance 2 from the target, in a graph of diameter at most 3"""

    kind = "pendant-pair"

    def __init__(self, target, u, v, w):
        self.target = target
        self.u = u
        self.v = v
        self.w = w

    def to_data(self):
        return {"kind": self.kind, "target": self.target, "u": self.u, "v": self.v, "w": self.w}

    def __eq__(self, other):
        return isinstance(other, PendantPairCertificate) and self.to_data() == other.to_data()

    def __repr__(self):
        return "<PendantPairCertificate target={} u={} v={} w={}>".format(self.target, self.u, self.v, self.w)


KINDS = {cls.kind: cls for cls in (IndepSetCertificate, PendantPairCertificate)}


def certificate_from_data(data):
    """Rebuild a certificate from its JSON object

    :raises FormatError: if the kind is unknown or a field is missing
    """
    if not isinstance(data, dict):
        raise FormatError("a certificate must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise FormatError("unknown certificate kind {!r}".format(kind))
    try:
        if kind == IndepSetCertificate.kind:
            return IndepSetCertificate(
                int(data["target"]),
                [int(x) for x in data["u_set"]],
                int(data["u_prime_size"]),
                int(data["w_size"]),
                int(data["ecc"]),
            )
        return PendantPairCertificate(int(data["target"]), int(data["u"]), int(data["v"]), int(data["w"]))
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError("malformed {} certificate: {}".format(kind, e))


class CertificateMap(object):
    """Non-stackability certificates for some targets of a graph

    :var n: Number of vertices of the graph
    :var certificates: Certificate per covered target
    :vartype certificates: dict
    """

    def __init__(self, n, certificates=None):
        self.n = n
        self.certificates = dict(certificates or {})

    @property
    def complete(self):
        """True if every target is covered, proving the graph strongly non-stackable"""
        return self.n > 0 and len(self.certificates) == self.n

    @property
    def covered(self):
        return sorted(self.certificates)

    def __len__(self):
        return len(self.certificates)

    def __contains__(self, t):
        return t in self.certificates

    def __getitem__(self, t):
        return self.certificates[t]

    def to_data(self):
        return {
            "n": self.n,
            "complete": self.complete,
            "certificates": [self.certificates[t].to_data() for t in self.covered],
        }

    @classmethod
    def from_data(cls, data):
        try:
            certificates = [certificate_from_data(item) for item in data["certificates"]]
            return cls(int(data["n"]), {c.target: c for c in certificates})
        except (KeyError, TypeError, ValueError) as e:
            raise FormatError("malformed certificate map: {}".format(e))

    def __repr__(self):
        return "<CertificateMap covered={}/{}>".format(len(self.certificates), self.n)


def loads_certificates(text):
    """Parse a single certificate or a certificate map"""
    try:
        data = json.loads(text)
    except ValueError as e:
        raise FormatError("invalid JSON: {}".format(e))
    if isinstance(data, dict) and "certificates" in data:
        return CertificateMap.from_data(data)
    return certificate_from_data(data)


def write_certificates(item, destination):
    with open(destination, "w") as f:
        json.dump(item.to_data(), f, indent=2)
        f.write("\n")


def read_certificates(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source) as f:
            return loads_certificates(f.read())
    return loads_certificates(source.read())
