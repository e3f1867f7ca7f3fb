from fopkit.scripts.runner import main

main()
