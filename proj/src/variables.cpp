#include "framecert/variables.hpp"

namespace framecert {

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error("empty variable name");
        auto [it, fresh] = index_.emplace(names_[i], i);
        if (!fresh) throw Error("duplicate variable name: " + names_[i]);
    }
}

std::shared_ptr<const VariableTable> VariableTable::hermitian(int d) {
    if (d < 2) throw Error("Hermitian variable table requires dimension >= 2");
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(d) * d);
    for (int j = 1; j <= d; ++j)
        for (int k = j; k <= d; ++k)
            names.push_back("x" + std::to_string(j) + std::to_string(k));
    for (int j = 1; j <= d; ++j)
        for (int k = j + 1; k <= d; ++k)
            names.push_back("y" + std::to_string(j) + std::to_string(k));
    return make(std::move(names));
}

size_t VariableTable::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown variable: " + name);
    return it->second;
}

}  // namespace framecert
