abstract class Abstract8 extends State {
}
