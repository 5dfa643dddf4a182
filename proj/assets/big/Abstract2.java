abstract class Abstract2 extends State {
}
