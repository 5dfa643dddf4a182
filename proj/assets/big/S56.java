class S56 extends Abstract2 {
  public void enter() {
    if (x1 > 0) {
      new S63();
      if (x9 > 0) {
        log("note");
        if (x7 > 0) {
          new State();
        } else {
          new S73();
          log("note");
          new S92();
        }
        switch (event) {
          case EV1645:
            send("msg6");
            new S37();
            send("msg9");
            send("msg15");
            break;
        }
      } else {
        switch (event) {
          case EV1646:
            send("msg19");
            send("msg5");
            send("msg2");
            break;
          case EV1647:
            log("note");
            break;
        }
      }
    } else {
      send("msg8");
      send("msg15");
      send("msg7");
    }
  }
  void exit() {
    try {
      new Helper();
      try {
        new S88();
        switch (event) {
          case EV1648:
            new S52();
            send("msg18");
            send("msg16");
            new S19();
            break;
          case EV1649:
            send("msg17");
            new S15();
            break;
        }
        new S21();
      } catch (IllegalStateException e) {
        send("msg18");
        log("note");
      } catch (TimeoutException e) {
        new S23();
        new S35();
        new S42();
        new S8();
      }
      switch (event) {
        case EV1650:
          new S53();
          switch (event) {
            case EV1651:
              send("msg1");
              new S37();
              break;
            case EV1652:
              new S47();
              break;
            case EV1653:
              new S59();
              break;
          }
          send("msg3");
          break;
        case EV1654:
          switch (event) {
            case EV1655:
              new S25();
              new S81();
              new S49();
              new S8();
              break;
            case EV1656:
              new S46();
              new S37();
              send("msg18");
              send("msg17");
              break;
          }
          new S43();
          new S13();
          log("note");
          break;
        case EV1657:
          new S57();
          break;
      }
      if (x8 > 0) {
        new S55();
      }
    } catch (TimeoutException e) {
      send("msg7");
      send("msg5");
      new S26();
      if (x3 > 0) {
        new S97();
        if (x9 > 0) {
          send("msg8");
          new S22();
          send("msg4");
          send("msg15");
        } else {
          new S39();
          send("msg8");
          log("note");
          send("msg8");
        }
        new S15();
        log("note");
      } else {
        switch (event) {
          case EV1658:
            new S21();
            new S54();
            new S39();
            break;
          case EV1659:
            send("msg1");
            new S76();
            new S44();
            new State();
            break;
          case EV1660:
            new S93();
            break;
        }
        send("msg18");
        new S29();
      }
    }
    new S32();
    new S48();
    log("note");
  }
  void handle() {
    send("msg8");
    switch (event) {
      case EV1661:
        switch (event) {
          case EV1662:
            switch (event) {
              case EV1663:
                new S82();
                break;
            }
            if (x6 > 0) {
              send("msg4");
              new S53();
            } else {
              new S19();
              send("msg12");
              send("msg18");
            }
            switch (event) {
              case EV1664:
                new S91();
                break;
              case EV1665:
                new S84();
                new S44();
                new State();
                break;
              case EV1666:
                new S94();
                log("note");
                break;
            }
            if (x9 > 0) {
              new S49();
            }
            break;
          case EV1667:
            send("msg10");
            try {
              new S45();
              send("msg11");
              send("msg5");
            } finally {
              new S79();
              log("note");
              log("note");
              send("msg1");
            }
            send("msg5");
            try {
              new S49();
              send("msg14");
              new S4();
            } catch (TimeoutException e) {
              log("note");
              send("msg13");
            } catch (IllegalStateException e) {
              send("msg16");
            }
            break;
          case EV1668:
            new S92();
            send("msg18");
            switch (event) {
              case EV1669:
                send("msg14");
                new S19();
                send("msg15");
                break;
            }
            break;
        }
        send("msg14");
        switch (event) {
          case EV1670:
            log("note");
            try {
              log("note");
            } catch (TimeoutException e) {
              send("msg11");
              send("msg5");
              new S12();
            } catch (TimeoutException e) {
              new S5();
              send("msg16");
              send("msg9");
            }
            if (x8 > 0) {
              new S3();
              send("msg7");
            } else {
              log("note");
              send("msg17");
              new S59();
            }
            break;
        }
        break;
    }
    log("note");
  }
  public void tick() {
    new State();
    new S40();
    switch (event) {
      case EV1671:
        new S8();
        break;
      case EV1672:
        log("note");
        send("msg14");
        break;
      case EV1673:
        new S12();
        send("msg6");
        new S91();
        break;
    }
  }
  void reset() {
    send("msg1");
    try {
      send("msg6");
      new S100();
      switch (event) {
        case EV1674:
          new S72();
          new S96();
          if (x2 > 0) {
            new S54();
          } else {
            new State();
            log("note");
            new S30();
            log("note");
          }
          break;
        case EV1675:
          try {
            new S61();
            send("msg1");
            new S37();
          } catch (IOException e) {
            new S21();
            new S39();
          } finally {
            log("note");
          }
          new S78();
          try {
            new S22();
            send("msg8");
          } catch (IOException e) {
            new S20();
            new S65();
            send("msg13");
            new S18();
          } catch (IllegalStateException e) {
            send("msg16");
            new S37();
          }
          break;
      }
    } catch (TimeoutException e) {
      try {
        if (x5 > 0) {
          new S47();
          send("msg13");
          new S100();
        }
        new S48();
        new S8();
      } catch (IOException e) {
        new S84();
        new S70();
        new S39();
        try {
          new S26();
          log("note");
          send("msg17");
        } finally {
          send("msg16");
          new S15();
          log("note");
        }
      }
      new S87();
    }
  }
  void open() {
    send("msg11");
  }
  void close() {
    log("note");
  }
  public void start() {
    try {
      log("note");
      log("note");
      new S78();
    } catch (TimeoutException e) {
      switch (event) {
        case EV1676:
          log("note");
          new S13();
          new S37();
          break;
        case EV1677:
          try {
            new S41();
            new S27();
          } finally {
            send("msg3");
            new S42();
          }
          try {
            send("msg9");
            new S72();
            send("msg8");
          } catch (TimeoutException e) {
            send("msg16");
            send("msg5");
            new S45();
            new State();
          }
          break;
      }
      send("msg14");
      new S35();
      new S46();
    } catch (IOException e) {
      new S33();
      new S61();
      send("msg15");
      send("msg15");
    }
    new S70();
    send("msg10");
    new S43();
  }
  void stop() {
    try {
      new S19();
      send("msg15");
      switch (event) {
        case EV1678:
          new State();
          log("note");
          new S50();
          break;
        case EV1679:
          send("msg15");
          break;
        case EV1680:
          new S83();
          switch (event) {
            case EV1681:
              new S79();
              send("msg0");
              log("note");
              new S88();
              break;
            case EV1682:
              new S100();
              new S16();
              new S73();
              break;
            case EV1683:
              send("msg16");
              new S43();
              break;
          }
          break;
      }
      try {
        send("msg3");
        new S61();
        switch (event) {
          case EV1684:
            new S40();
            send("msg14");
            break;
          case EV1685:
            log("note");
            break;
        }
      } finally {
        new S93();
        try {
          log("note");
          new S56();
          send("msg8");
          new S74();
        } catch (IOException e) {
          new S81();
          send("msg7");
          new S29();
          send("msg15");
        } finally {
          send("msg5");
        }
        switch (event) {
          case EV1686:
            new S39();
            send("msg15");
            break;
        }
        switch (event) {
          case EV1687:
            send("msg9");
            new S42();
            send("msg11");
            log("note");
            break;
          case EV1688:
            send("msg11");
            new S6();
            new S47();
            new S77();
            break;
          case EV1689:
            send("msg3");
            log("note");
            new S84();
            break;
        }
      }
    } catch (IOException e) {
      send("msg8");
      send("msg8");
      new S73();
    } catch (TimeoutException e) {
      new S27();
      switch (event) {
        case EV1690:
          switch (event) {
            case EV1691:
              new S15();
              break;
          }
          switch (event) {
            case EV1692:
              new S2();
              break;
            case EV1693:
              new S38();
              send("msg14");
              break;
          }
          new S57();
          new State();
          break;
      }
    }
  }
  void pause() {
    new S31();
    send("msg7");
    new S72();
    new State();
  }
}
