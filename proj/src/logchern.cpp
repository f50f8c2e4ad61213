#include "logchern.hpp"

#include <set>
#include <stdexcept>

#include "errors.hpp"

namespace geolab::logchern {

namespace {

const CurveFamily* find_family(const ArrangementSummary& arr, const std::string& label) {
    for (const auto& f : arr.families)
        if (f.label == label) return &f;
    return nullptr;
}

const SingularityClass* find_class(const ArrangementSummary& arr, const std::string& label) {
    for (const auto& s : arr.singularities)
        if (s.label == label) return &s;
    return nullptr;
}

}  // namespace

void validate(const ArrangementSummary& arr) {
    std::set<std::string> seen;
    for (const auto& f : arr.families) {
        if (f.label.empty()) throw std::domain_error("curve family with empty label");
        if (!seen.insert(f.label).second) throw std::domain_error("duplicate curve family label: " + f.label);
        if (f.count < 0) throw std::domain_error("negative curve count in family " + f.label);
        if (f.genus < 0) throw std::domain_error("negative genus in family " + f.label);
        if (f.multiplicity < 1) throw std::domain_error("multiplicity < 1 in family " + f.label);
        for (const auto& [cls, inc] : f.incidence) {
            if (inc < 0) throw std::domain_error("negative incidence in family " + f.label);
            if (find_class(arr, cls) == nullptr)
                throw std::domain_error("family " + f.label + " meets unknown singularity class " + cls);
        }
    }
    seen.clear();
    for (const auto& s : arr.singularities) {
        if (s.label.empty()) throw std::domain_error("singularity class with empty label");
        if (!seen.insert(s.label).second) throw std::domain_error("duplicate singularity class label: " + s.label);
        if (s.k < 2) throw std::domain_error("singularity class " + s.label + " has order < 2");
        if (s.count < 0) throw std::domain_error("negative point count in class " + s.label);
        // Each point of order k absorbs exactly k curve branches.
        Int branches = 0;
        for (const auto& f : arr.families) {
            auto it = f.incidence.find(s.label);
            if (it != f.incidence.end()) branches += f.count * it->second;
        }
        if (branches != s.k * s.count)
            throw std::domain_error("double count fails for class " + s.label + ": curves supply " +
                                    to_string(branches) + " branches, points need " + to_string(Int(s.k * s.count)));
    }
    if (!is_integer(arr.ambient_c1sq) || !is_integer(arr.ambient_c2))
        throw std::domain_error("ambient Chern numbers must be integers");
    Rat noether = arr.ambient_c1sq + arr.ambient_c2;
    if (!is_integer(noether / 12)) throw std::domain_error("ambient Chern numbers fail Noether divisibility by 12");
}

std::pair<Rat, Rat> log_chern_numbers(const ArrangementSummary& arr) {
    validate(arr);
    Rat c1 = arr.ambient_c1sq;
    Rat c2 = arr.ambient_c2;
    for (const auto& f : arr.families) {
        Int per_family = f.count * (f.genus - 1);
        c1 += -Rat(f.count * f.self_intersection) + 4 * Rat(per_family);
        c2 += 2 * Rat(per_family);
    }
    for (const auto& s : arr.singularities) {
        c1 += Rat((3 * s.k - 4) * s.count);
        c2 += Rat((s.k - 1) * s.count);
    }
    return {c1, c2};
}

ArrangementSummary blow_up_class(const ArrangementSummary& arr, const std::string& class_label, const Int& k,
                                 bool adjoin_exceptional) {
    validate(arr);
    const SingularityClass* cls = find_class(arr, class_label);
    if (cls == nullptr) throw std::domain_error("unknown singularity class: " + class_label);
    if (cls->k != k)
        throw std::domain_error("class " + class_label + " has order " + to_string(cls->k) + ", not " + to_string(k));
    if (cls->count == 0) return arr;  // nothing to blow up

    const std::string node_label = class_label + "-nodes";
    const std::string exc_label = class_label + "-exc";
    if (adjoin_exceptional) {
        if (find_class(arr, node_label) != nullptr)
            throw std::domain_error("label collision: " + node_label + " already present");
        if (find_family(arr, exc_label) != nullptr)
            throw std::domain_error("label collision: " + exc_label + " already present");
    }
    for (const auto& f : arr.families)
        if (f.incidence.find(class_label) == f.incidence.end())
            throw std::domain_error("family " + f.label + " lacks incidence data for class " + class_label);

    ArrangementSummary out;
    const Int t = cls->count;
    out.ambient_c1sq = arr.ambient_c1sq - Rat(t);
    out.ambient_c2 = arr.ambient_c2 + Rat(t);

    for (const auto& f : arr.families) {
        CurveFamily g = f;
        Int through = g.incidence.at(class_label);
        g.self_intersection -= through;  // each point lies on the curve once (ordinary point)
        g.incidence.erase(class_label);
        if (adjoin_exceptional) g.incidence[node_label] = through;
        out.families.push_back(std::move(g));
    }
    for (const auto& s : arr.singularities)
        if (s.label != class_label) out.singularities.push_back(s);

    if (adjoin_exceptional) {
        // Each exceptional curve meets the k strict transforms through its
        // point transversally: k nodes per exceptional curve, k*t in total.
        out.singularities.push_back({node_label, 2, k * t});
        CurveFamily exc;
        exc.label = exc_label;
        exc.count = t;
        exc.genus = 0;
        exc.self_intersection = -1;
        exc.incidence[node_label] = k;
        for (const auto& s : out.singularities)
            if (s.label != node_label) exc.incidence[s.label] = 0;
        out.families.push_back(std::move(exc));
    }
    validate(out);
    return out;
}

}  // namespace geolab::logchern
