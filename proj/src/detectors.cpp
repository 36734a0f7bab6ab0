#include "knotlab/detectors.hpp"

#include <stdexcept>

#include "knotlab/planarity.hpp"

namespace knotlab {

const char* to_string(Status s) {
    switch (s) {
        case Status::CertifiedYes: return "certified-yes";
        case Status::CertifiedNo: return "certified-no";
        case Status::Unknown: return "unknown";
    }
    return "?";
}

const char* to_string(CertKind k) {
    switch (k) {
        case CertKind::None: return "none";
        case CertKind::MaderBound: return "mader-bound";
        case CertKind::CliqueMinor: return "clique-minor";
        case CertKind::PetersenMinor: return "petersen-minor";
        case CertKind::ApexWitness: return "apex-witness";
        case CertKind::NotIL: return "not-il";
        case CertKind::Planarity: return "planarity";
    }
    return "?";
}

Verdict classify_nonplanar(const Graph& g) {
    Verdict v;
    v.status = is_planar(g) ? Status::CertifiedNo : Status::CertifiedYes;
    v.kind = CertKind::Planarity;
    return v;
}

Verdict classify_IL(const Graph& g) {
    Verdict v;
    // Every family member is nonplanar (validated at family construction),
    // and minors of planar graphs are planar.
    if (is_planar(g)) {
        v.status = Status::CertifiedNo;
        v.kind = CertKind::NotIL;
        return v;
    }
    // One combined search over all seven members; deciding "no" for all of
    // them shares a single traversal of the contraction space.
    if (auto hit = has_any_minor(g, petersen_family())) {
        v.status = Status::CertifiedYes;
        v.kind = CertKind::PetersenMinor;
        v.family_member = hit->first;
        v.minor_cert = std::move(hit->second);
        return v;
    }
    v.status = Status::CertifiedNo;
    v.kind = CertKind::NotIL;
    return v;
}

Verdict classify_IK(const Graph& g, const ClassifyOptions& opts) {
    Verdict v;
    if (mader_certifies(g)) {
        v.status = Status::CertifiedYes;
        v.kind = CertKind::MaderBound;
        return v;
    }
    if (opts.force_apex || g.order() <= opts.apex_order_cutoff) {
        ApexResult apex = is_n_apex(g, 2);
        if (apex.is_n_apex) {
            v.status = Status::CertifiedNo;
            v.kind = CertKind::ApexWitness;
            v.witness = std::move(apex.witness);
            return v;
        }
    }
    Verdict il = classify_IL(g);
    if (il.status == Status::CertifiedNo) {
        v.status = Status::CertifiedNo;
        v.kind = CertKind::NotIL;
        return v;
    }
    if (auto cert = has_clique_minor(g, 7)) {
        v.status = Status::CertifiedYes;
        v.kind = CertKind::CliqueMinor;
        v.minor_cert = std::move(*cert);
        return v;
    }
    return v;  // Unknown
}

Verdict classify_not_n_apex(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("classify_not_n_apex: k must be nonnegative");
    Verdict v;
    ApexResult apex = is_n_apex(g, k);
    if (apex.is_n_apex) {
        v.status = Status::CertifiedNo;
        v.kind = CertKind::ApexWitness;
        v.witness = std::move(apex.witness);
    } else {
        v.status = Status::CertifiedYes;
        v.kind = CertKind::Planarity;
    }
    return v;
}

}  // namespace knotlab
