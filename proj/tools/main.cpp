#include "hfshift/shifts.hpp"
int main() { return 0; }
