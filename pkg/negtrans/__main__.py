from negtrans.cli import main

main()
