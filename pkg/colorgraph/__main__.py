from colorgraph.main import main

main()
