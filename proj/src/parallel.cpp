#include "h3avg/parallel.hpp"

namespace h3avg {

int default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

} // namespace h3avg
