#include "mrhweno/config.hpp"

int main(int argc, char** argv) { return mrhweno::main_entry(argc, argv); }
