#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfforge/gvec.hpp"

namespace hopfforge {

struct MissingStructure : std::runtime_error {
    explicit MissingStructure(const std::string& what) : std::runtime_error("missing structure: " + what) {}
};
struct PreconditionFailed : std::runtime_error {
    std::string label;
    explicit PreconditionFailed(const std::string& l) : std::runtime_error("precondition failed: " + l), label(l) {}
};
struct CheckFailed : std::runtime_error {
    std::string label;
    explicit CheckFailed(const std::string& l) : std::runtime_error("check failed: " + l), label(l) {}
};
struct FactorizationFailed : std::runtime_error {
    explicit FactorizationFailed(const std::string& what)
        : std::runtime_error("factorization failed: " + what) {}
};
struct InvalidMatchedPair : std::runtime_error {
    explicit InvalidMatchedPair(const std::string& what) : std::runtime_error("invalid matched pair: " + what) {}
};

/// Per-equation verdict, keyed by a stable equation label.
struct CheckEntry {
    std::string label;
    bool pass = false;
    std::optional<EqWitness> witness;  // first differing coordinate, with both values
};

struct CheckReport {
    std::vector<CheckEntry> entries;

    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    void add(const std::string& label, std::optional<EqWitness> diff) {
        for (const auto& e : entries)
            if (e.label == label) throw std::logic_error("duplicate report label: " + label);
        entries.push_back({label, !diff.has_value(), std::move(diff)});
    }

    void add_bool(const std::string& label, bool ok) {
        for (const auto& e : entries)
            if (e.label == label) throw std::logic_error("duplicate report label: " + label);
        entries.push_back({label, ok, std::nullopt});
    }

    void merge(const CheckReport& o) {
        for (const auto& e : o.entries) entries.push_back(e);
    }

    void merge_prefixed(const CheckReport& o, const std::string& prefix) {
        for (auto e : o.entries) {
            e.label = prefix + e.label;
            entries.push_back(std::move(e));
        }
    }

    const CheckEntry* find(const std::string& label) const {
        for (const auto& e : entries)
            if (e.label == label) return &e;
        return nullptr;
    }

    std::string first_failing() const {
        for (const auto& e : entries)
            if (!e.pass) return e.label;
        return {};
    }

    void require_pass(const std::string& context) const {
        if (!pass()) throw PreconditionFailed(context + ": " + first_failing());
    }
};

}  // namespace hopfforge
