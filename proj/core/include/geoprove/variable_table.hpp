#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace geoprove {

/// Role of a variable in an algebraized construction.  Free variables
/// parameterize the instance space, dependent variables are pinned down by
/// hypothesis equations, auxiliary variables are internal helpers that never
/// appear in user-facing output.
enum class VarKind { Free, Dependent, Auxiliary };

/// Names and roles of the variables of one polynomial ring.  The insertion
/// index is the variable's index in every Monomial exponent vector; index 0
/// is the most significant variable under the plain orders.
class VariableTable {
public:
    int add(const std::string& name, VarKind kind) {
        if (by_name_.count(name))
            throw std::invalid_argument("duplicate variable: " + name);
        int idx = static_cast<int>(names_.size());
        by_name_.emplace(name, idx);
        names_.push_back(name);
        kinds_.push_back(kind);
        return idx;
    }

    bool contains(const std::string& name) const { return by_name_.count(name) != 0; }

    int index_of(const std::string& name) const {
        auto it = by_name_.find(name);
        return it == by_name_.end() ? -1 : it->second;
    }

    const std::string& name(int idx) const { return names_.at(idx); }
    VarKind kind(int idx) const { return kinds_.at(idx); }
    std::size_t size() const { return names_.size(); }

    std::vector<int> indices_of(VarKind kind) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < kinds_.size(); ++i)
            if (kinds_[i] == kind) out.push_back(static_cast<int>(i));
        return out;
    }

    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::vector<VarKind> kinds_;
    std::unordered_map<std::string, int> by_name_;
};

} // namespace geoprove
