#ifndef KNOTLAB_DETECTORS_HPP
#define KNOTLAB_DETECTORS_HPP

#include <string>

#include "knotlab/graph.hpp"
#include "knotlab/minors.hpp"

namespace knotlab {

enum class Status { CertifiedYes, CertifiedNo, Unknown };

/// What backs a certified verdict.
///   MaderBound     order >= 7 and size >= 5*order - 14 (recheck by counting)
///   CliqueMinor    a verified K_7 branch-set certificate
///   PetersenMinor  a verified branch-set certificate for one family member
///   ApexWitness    a vertex set whose deletion leaves a planar graph
///   NotIL          exhaustive absence of all seven family minors
///   Planarity      the exact planarity/apex search itself
enum class CertKind { None, MaderBound, CliqueMinor, PetersenMinor, ApexWitness, NotIL, Planarity };

struct Verdict {
    Status status = Status::Unknown;
    CertKind kind = CertKind::None;
    MinorCertificate minor_cert;  // CliqueMinor / PetersenMinor
    int family_member = -1;       // PetersenMinor: index into petersen_family()
    VertexSet witness;            // ApexWitness
};

const char* to_string(Status s);
const char* to_string(CertKind k);

struct ClassifyOptions {
    // The 2-apex rule is skipped above this order unless forced; the subset
    // search is the expensive step on large hosts.
    int apex_order_cutoff = 30;
    bool force_apex = false;
};

/// Exact, never Unknown.
Verdict classify_nonplanar(const Graph& g);

/// Exact via the Robertson-Seymour-Thomas obstruction set: intrinsically
/// linked iff some Petersen-family member is a minor. Never Unknown.
Verdict classify_IL(const Graph& g);

/// Certified-only classification for intrinsic knotting. Rule order:
/// Mader edge bound, then 2-apex, then IL, then K_7 minor search.
/// CertifiedYes: Mader bound or K_7 minor. CertifiedNo: 2-apex, or not IL.
/// Anything else is honestly Unknown (no exact IK decision is known).
Verdict classify_IK(const Graph& g, const ClassifyOptions& opts = {});

/// CertifiedYes means NOT k-apex. Exact, never Unknown.
Verdict classify_not_n_apex(const Graph& g, int k);

}  // namespace knotlab

#endif
