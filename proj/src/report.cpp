#include "thetaq/report.hpp"

#include <algorithm>

namespace thetaq {

bool CheckReport::pass() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return !i.pass; }));
}

void CheckReport::add(std::string name, bool ok, std::string witness) {
    items.push_back(CheckItem{std::move(name), ok, ok ? std::string() : std::move(witness)});
}

void CheckReport::merge(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace thetaq
