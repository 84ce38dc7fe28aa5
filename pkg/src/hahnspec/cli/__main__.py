from hahnspec.cli import cli_main

cli_main()
