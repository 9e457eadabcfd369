#include "homcheck/cli.hpp"

int main(int argc, char **argv)
{
	return homcheck::cli::run(argc, argv);
}
