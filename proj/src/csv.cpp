#include "rodsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rodsim {

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15e", v);
    return buf;
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) throw std::runtime_error("cannot open " + path);
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << header[i];
    }
    impl_->out << '\n';
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) impl_->out << ',';
        impl_->out << format_sci(values[i]);
    }
    impl_->out << '\n';
}

}  // namespace rodsim
