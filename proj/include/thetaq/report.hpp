#pragma once

#include <string>
#include <vector>

namespace thetaq {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;  // rendered offending value when failing
};

/// Ordered pass/fail items of one verification run.
struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;
    std::vector<std::string> notes;

    bool pass() const;
    std::size_t failures() const;
    void add(std::string name, bool ok, std::string witness = {});
    void merge(const CheckReport& other);
};

}  // namespace thetaq
