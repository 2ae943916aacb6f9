#pragma once

#include <string>

#ifndef TDK_TEST_DATA_DIR
#define TDK_TEST_DATA_DIR "tests/data"
#endif

inline std::string data_path(const std::string& name) {
    return std::string(TDK_TEST_DATA_DIR) + "/" + name;
}
