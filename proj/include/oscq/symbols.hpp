#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oscq {

// Interned symbolic parameter names (a1..a6, z, beta, delta, ...).
// Ids are stable for the lifetime of the process; polynomials store ids only.
class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable t;
        return t;
    }

    int intern(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        ids_.emplace(name, id);
        return id;
    }

    const std::string& name(int id) const {
        if (id < 0 || id >= static_cast<int>(names_.size()))
            throw std::out_of_range("SymbolTable: bad id");
        return names_[id];
    }

private:
    SymbolTable() = default;
    std::vector<std::string> names_;
    std::map<std::string, int> ids_;
};

inline int sym(const std::string& name) { return SymbolTable::instance().intern(name); }
inline const std::string& sym_name(int id) { return SymbolTable::instance().name(id); }

}  // namespace oscq
